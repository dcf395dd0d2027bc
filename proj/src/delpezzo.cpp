#include "garnier/delpezzo.hpp"

#include "garnier/matrix.hpp"
#include "garnier/ratfun.hpp"
#include "garnier/roots.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace garnier {

namespace {

std::vector<Rat> cross(const std::vector<Rat>& u, const std::vector<Rat>& v) {
  return {u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0]};
}

Rat dot(const std::vector<Rat>& u, const std::vector<Rat>& v) {
  Rat s = 0;
  for (size_t k = 0; k < u.size(); ++k) s += u[k] * v[k];
  return s;
}

std::pair<Rat, Rat> homog(const P1Point& z) {
  return z.inf ? std::pair<Rat, Rat>{1, 0} : std::pair<Rat, Rat>{z.v, 1};
}

}  // namespace

// ---------------------------------------------------------------------------
// Curve catalog.
// ---------------------------------------------------------------------------

std::string SpecialCurve::name() const {
  switch (tag) {
    case CurveTag::Conic:
      return "Pi";
    case CurveTag::Exceptional:
      return "Pi_" + std::to_string(i);
    case CurveTag::Line:
      return "Pi_{" + std::to_string(i) + "," + std::to_string(j) + "}";
  }
  return "?";
}

int CurveCatalog::line_index(int i, int j) {
  if (i > j) std::swap(i, j);
  if (i < 1 || j > 5 || i == j) throw std::out_of_range("line index");
  int idx = 6;
  for (int a = 1; a <= 5; ++a)
    for (int b = a + 1; b <= 5; ++b) {
      if (a == i && b == j) return idx;
      ++idx;
    }
  throw std::out_of_range("line index");
}

ProjPoint conic_point(const P1Point& z) {
  auto [x, y] = homog(z);
  return ProjPoint({y * y, x * y, x * x});
}

CurveCatalog sixteen_curves(const PointConfig& config) {
  if (config.n() != 5) throw std::invalid_argument("the curve catalog needs five poles");
  CurveCatalog cat;
  cat.z = config.poles();
  for (const P1Point& z : cat.z) cat.D.push_back(conic_point(z));
  // Conic b1^2 - b0 b2 stored as the quadratic form on (b0^2, b0b1, b0b2, b1^2, b1b2, b2^2).
  cat.curves.push_back({CurveTag::Conic, 0, 0, {0, 0, -1, 1, 0, 0}});
  for (int i = 1; i <= 5; ++i) cat.curves.push_back({CurveTag::Exceptional, i, 0, {}});
  for (int i = 1; i <= 5; ++i)
    for (int j = i + 1; j <= 5; ++j) {
      std::vector<Rat> eq = cross(cat.D[i - 1].coords(), cat.D[j - 1].coords());
      cat.curves.push_back({CurveTag::Line, i, j, eq});
    }
  return cat;
}

std::vector<std::vector<int>> delpezzo_incidence(const CurveCatalog& cat) {
  auto on_line = [&](const std::vector<Rat>& eq, const ProjPoint& p) {
    return dot(eq, p.coords()) == 0;
  };
  std::vector<std::vector<int>> adj(16);
  auto connect = [&](int a, int b) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  };
  // The conic passes through every blown-up point, so its strict
  // transform meets each exceptional curve.
  for (int i = 1; i <= 5; ++i) connect(0, i);
  for (int i = 1; i <= 5; ++i)
    for (int j = i + 1; j <= 5; ++j) {
      int ij = CurveCatalog::line_index(i, j);
      const auto& eq = cat.curves[ij].equation;
      // The line through D_i and D_j meets the exceptional curves over
      // those two points, and no others for a generic configuration.
      for (int r = 1; r <= 5; ++r) {
        bool on = on_line(eq, cat.D[r - 1]);
        if (on != (r == i || r == j))
          throw std::domain_error("non-generic pole configuration: extra collinearity");
        if (on) connect(r, ij);
      }
      // The conic meets the line exactly at D_i and D_j (a conic and a
      // line share two points), so the strict transforms are disjoint.
    }
  // Lines with disjoint index pairs meet away from the blown-up points.
  for (int i = 1; i <= 5; ++i)
    for (int j = i + 1; j <= 5; ++j)
      for (int k = i; k <= 5; ++k)
        for (int m = k + 1; m <= 5; ++m) {
          if (std::make_pair(k, m) <= std::make_pair(i, j)) continue;
          bool disjoint = k != i && k != j && m != i && m != j;
          int ij = CurveCatalog::line_index(i, j), km = CurveCatalog::line_index(k, m);
          ProjPoint p(cross(cat.curves[ij].equation, cat.curves[km].equation));
          bool hits_center = false;
          for (const ProjPoint& d : cat.D) hits_center = hits_center || p == d;
          if (disjoint) {
            if (hits_center)
              throw std::domain_error("non-generic pole configuration: crossing at a center");
            connect(ij, km);
          } else if (!hits_center) {
            throw std::domain_error("lines sharing an index must cross at the shared point");
          }
        }
  for (auto& row : adj) std::sort(row.begin(), row.end());
  return adj;
}

// ---------------------------------------------------------------------------
// Special points in the a-plane.
// ---------------------------------------------------------------------------

std::vector<Rat> delta_line(const P1Point& z) {
  auto [x, y] = homog(z);
  return {y * y, x * y, x * x};
}

ProjPoint double_root_point(const P1Point& z) {
  auto [x, y] = homog(z);
  return ProjPoint({x * x, -2 * x * y, y * y});
}

ProjPoint tangent_crossing(const P1Point& zi, const P1Point& zj) {
  auto [xi, yi] = homog(zi);
  auto [xj, yj] = homog(zj);
  return ProjPoint({xi * xj, -(xi * yj + xj * yi), yi * yj});
}

// ---------------------------------------------------------------------------
// Lifts inside the incidence variety.
// ---------------------------------------------------------------------------

namespace {

using PPoly = Poly<Rat>;
using PVec = std::vector<PPoly>;

PVec const_polys(const std::vector<Rat>& v) {
  PVec out;
  for (const Rat& x : v) out.push_back(PPoly{x});
  return out;
}

// Equations pinning a projective coordinate vector to a fixed point.
void add_point_equations(std::vector<LiftedCurve::EqFn>& eqs, bool on_a,
                         const std::vector<Rat>& p) {
  for (int r = 0; r < 3; ++r)
    for (int s = r + 1; s < 3; ++s)
      eqs.push_back([on_a, p, r, s](const PVec& a, const PVec& b) {
        const PVec& v = on_a ? a : b;
        return p[s] * v[r] - p[r] * v[s];
      });
}

}  // namespace

namespace {

// Each projective factor carries its own homogenization degree, so the
// limit at the infinite parameter scales the factors independently.
int factor_degree(const PVec& polys) {
  int d = 0;
  for (const auto& p : polys) d = std::max(d, p.degree());
  return d;
}

}  // namespace

std::pair<std::vector<Rat>, std::vector<Rat>> LiftedCurve::at(const P1Point& s) const {
  std::vector<Rat> pa, pb;
  if (s.inf) {
    int ha = factor_degree(a), hb = factor_degree(b);
    for (const auto& p : a) pa.push_back(p.coeff(ha));
    for (const auto& p : b) pb.push_back(p.coeff(hb));
  } else {
    for (const auto& p : a) pa.push_back(p.template eval<Rat>(s.v));
    for (const auto& p : b) pb.push_back(p.template eval<Rat>(s.v));
  }
  return {pa, pb};
}

std::vector<LiftedCurve> sigma_lift(const PointConfig& config) {
  CurveCatalog cat = sixteen_curves(config);
  std::vector<LiftedCurve> out;

  LiftedCurve gamma;
  gamma.name = "Gamma";
  gamma.tag = CurveTag::Conic;
  gamma.a = {PPoly{0, 0, 1}, PPoly{0, -2}, PPoly{1}};
  gamma.b = {PPoly{1}, PPoly{0, 1}, PPoly{0, 0, 1}};
  gamma.h = 2;
  gamma.eqs.push_back([](const PVec& a, const PVec&) { return a[1] * a[1] - 4 * (a[0] * a[2]); });
  gamma.eqs.push_back([](const PVec& a, const PVec& b) { return a[0] * b[0] - a[2] * b[2]; });
  gamma.eqs.push_back([](const PVec& a, const PVec& b) { return 2 * (a[2] * b[2]) + a[1] * b[1]; });
  out.push_back(std::move(gamma));

  for (int i = 1; i <= 5; ++i) {
    auto [x, y] = homog(cat.z[i - 1]);
    LiftedCurve g;
    g.name = "Gamma_" + std::to_string(i);
    g.tag = CurveTag::Exceptional;
    g.i = i;
    g.a = {PPoly{0, x}, PPoly{-x, -y}, PPoly{y}};
    g.b = const_polys(cat.D[i - 1].coords());
    g.h = 1;
    std::vector<Rat> dl = delta_line(cat.z[i - 1]);
    g.eqs.push_back([dl](const PVec& a, const PVec&) {
      return dl[0] * a[0] + dl[1] * a[1] + dl[2] * a[2];
    });
    add_point_equations(g.eqs, false, cat.D[i - 1].coords());
    out.push_back(std::move(g));
  }

  for (int i = 1; i <= 5; ++i)
    for (int j = i + 1; j <= 5; ++j) {
      LiftedCurve g;
      g.name = "Gamma_{" + std::to_string(i) + "," + std::to_string(j) + "}";
      g.tag = CurveTag::Line;
      g.i = i;
      g.j = j;
      std::vector<Rat> p = tangent_crossing(cat.z[i - 1], cat.z[j - 1]).coords();
      g.a = const_polys(p);
      const auto& di = cat.D[i - 1].coords();
      const auto& dj = cat.D[j - 1].coords();
      g.b = {PPoly{di[0], dj[0]}, PPoly{di[1], dj[1]}, PPoly{di[2], dj[2]}};
      g.h = 1;
      add_point_equations(g.eqs, true, p);
      std::vector<Rat> le = cat.curves[CurveCatalog::line_index(i, j)].equation;
      g.eqs.push_back([le](const PVec&, const PVec& b) {
        return le[0] * b[0] + le[1] * b[1] + le[2] * b[2];
      });
      out.push_back(std::move(g));
    }
  return out;
}

bool on_lifted_curve(const LiftedCurve& c, const std::vector<Rat>& a,
                     const std::vector<Rat>& b) {
  PVec pa = const_polys(a), pb = const_polys(b);
  for (const auto& eq : c.eqs)
    if (!eq(pa, pb).is_zero()) return false;
  return true;
}

std::optional<P1Point> lifted_parameter(const LiftedCurve& c, const std::vector<Rat>& a,
                                        const std::vector<Rat>& b) {
  auto matches = [&](const P1Point& s) {
    auto [pa, pb] = c.at(s);
    bool za = true, zb = true;
    for (const Rat& v : pa) za = za && v == 0;
    for (const Rat& v : pb) zb = zb && v == 0;
    if (za || zb) return false;
    return proj_equal(pa, a) && proj_equal(pb, b);
  };
  // Minor conditions in the parameter.
  PPoly g;
  auto fold = [&](const PVec& param, const std::vector<Rat>& p) {
    for (int r = 0; r < 3; ++r)
      for (int s = r + 1; s < 3; ++s) g = gcd(g, p[s] * param[r] - p[r] * param[s]);
  };
  fold(c.a, a);
  fold(c.b, b);
  if (!g.is_zero())
    for (const Rat& r : rational_roots(g).roots)
      if (matches(P1Point::finite(r))) return P1Point::finite(r);
  if (matches(P1Point::infinity())) return P1Point::infinity();
  return std::nullopt;
}

std::vector<std::pair<std::vector<Rat>, std::vector<Rat>>> intersect_lifted(
    const LiftedCurve& x, const LiftedCurve& y) {
  if (x.name == y.name) throw std::invalid_argument("intersecting a curve with itself");
  PPoly g;
  bool all_zero = true;
  for (const auto& eq : y.eqs) {
    PPoly v = eq(x.a, x.b);
    if (!v.is_zero()) all_zero = false;
    g = gcd(g, v);
  }
  if (all_zero) throw std::domain_error("curves coincide");
  std::vector<std::pair<std::vector<Rat>, std::vector<Rat>>> pts;
  auto try_param = [&](const P1Point& s) {
    auto [pa, pb] = x.at(s);
    bool za = true, zb = true;
    for (const Rat& v : pa) za = za && v == 0;
    for (const Rat& v : pb) zb = zb && v == 0;
    if (za || zb) return;
    if (!on_lifted_curve(y, pa, pb)) return;
    pa = proj_normalize(pa);
    pb = proj_normalize(pb);
    for (const auto& [qa, qb] : pts)
      if (qa == pa && qb == pb) return;
    pts.push_back({pa, pb});
  };
  for (const Rat& r : rational_roots(g).roots) try_param(P1Point::finite(r));
  try_param(P1Point::infinity());
  return pts;
}

namespace {

// Derivative of the parameterization at a parameter value, with the
// infinity end handled through the reversed coefficients.
std::vector<Rat> tangent_row(const LiftedCurve& c, const P1Point& s) {
  std::vector<Rat> row;
  auto push = [&](const PVec& polys) {
    int h = factor_degree(polys);
    for (const auto& p : polys) {
      PPoly q = s.inf ? p.reversed(h) : p;
      row.push_back(q.derivative().template eval<Rat>(s.inf ? Rat(0) : s.v));
    }
  };
  push(c.a);
  push(c.b);
  return row;
}

std::vector<Rat> point_row(const LiftedCurve& c, const P1Point& s) {
  auto [pa, pb] = c.at(s);
  std::vector<Rat> row = pa;
  row.insert(row.end(), pb.begin(), pb.end());
  return row;
}

}  // namespace

bool transversality_check(const LiftedCurve& x, const LiftedCurve& y,
                          const std::vector<Rat>& a, const std::vector<Rat>& b) {
  if (x.name == y.name) throw std::invalid_argument("transversality of a curve with itself");
  auto sx = lifted_parameter(x, a, b);
  auto sy = lifted_parameter(y, a, b);
  if (!sx || !sy) throw std::invalid_argument("point is not on both curves");
  // Rank 4 means the two tangent directions stay independent after
  // quotienting by the scaling directions of the two factors.
  std::vector<std::vector<Rat>> rows;
  rows.push_back(tangent_row(x, *sx));
  rows.push_back(tangent_row(y, *sy));
  std::vector<Rat> ra = point_row(x, *sx);
  std::vector<Rat> scale_a(6, Rat(0)), scale_b(6, Rat(0));
  for (int k = 0; k < 3; ++k) scale_a[k] = ra[k];
  for (int k = 3; k < 6; ++k) scale_b[k] = ra[k];
  rows.push_back(scale_a);
  rows.push_back(scale_b);
  return Mat<Rat>(rows).rank() == 4;
}

// ---------------------------------------------------------------------------
// Bundle representatives and classification.
// ---------------------------------------------------------------------------

ParabolicBundle chart_bundle(const std::vector<Rat>& u) {
  std::vector<ProjPoint> l;
  for (const Rat& v : u) l.push_back(ProjPoint({v, 1}));
  l.push_back(ProjPoint({0, 1}));
  l.push_back(ProjPoint({1, 1}));
  l.push_back(ProjPoint({0, 1}));
  return ParabolicBundle(0, -1, std::move(l));
}

std::vector<Rat> u_from_bundle(const ParabolicBundle& b, const PointConfig& config) {
  if (!config.is_normalized()) throw std::invalid_argument("chart coordinates need a normalized configuration");
  if (!(b.e1 == 0 && b.e2 == -1)) throw std::domain_error("bundle is not O + O(-1)");
  int n = b.n();
  if (config.n() != n) throw std::invalid_argument("configuration size mismatch");
  const auto& poles = config.poles();
  std::vector<Rat> x(n), y(n);
  for (int k = 0; k < n; ++k) {
    x[k] = b.l[k][0];
    y[k] = b.l[k][1];
  }
  int i0 = n - 3, i1 = n - 2, iinf = n - 1;
  if (y[i0] == 0 || y[i1] == 0 || y[iinf] == 0)
    throw std::domain_error("bundle outside the chart: parabolic on the degree-0 factor");
  // Normalize with the automorphism [[1, q0 + q1 z], [0, s]].
  Rat q0 = -x[i0] / y[i0];
  Rat q1 = -x[iinf] / y[iinf];
  Rat s = (x[i1] + (q0 + q1) * y[i1]) / y[i1];
  if (s == 0) throw std::domain_error("bundle outside the chart: degenerate normalization");
  std::vector<Rat> u;
  for (int k = 0; k < n - 3; ++k) {
    if (y[k] == 0)
      throw std::domain_error("bundle outside the chart: parabolic on the degree-0 factor");
    u.push_back((x[k] + (q0 + q1 * poles[k].v) * y[k]) / (s * y[k]));
  }
  return u;
}

bool common_subbundle(const ParabolicBundle& b, const PointConfig& config,
                      const std::vector<int>& idx, int sub_deg, std::vector<Rat>* section) {
  int ds = b.e1 - sub_deg, dc = b.e2 - sub_deg;
  if (ds < 0) return false;
  int cols = (ds + 1) + (dc >= 0 ? dc + 1 : 0);
  std::vector<std::vector<Rat>> rows;
  const auto& poles = config.poles();
  for (int k : idx) {
    Rat x = b.l[k][0], y = b.l[k][1];
    std::vector<Rat> row(cols, Rat(0));
    if (poles[k].inf) {
      row[ds] = y;
      if (dc >= 0) row[ds + 1 + dc] = -x;
    } else {
      Rat pw = 1;
      for (int r = 0; r <= ds; ++r) {
        row[r] = pw * y;
        pw *= poles[k].v;
      }
      pw = 1;
      for (int r = 0; r <= dc; ++r) {
        row[ds + 1 + r] = -pw * x;
        pw *= poles[k].v;
      }
    }
    rows.push_back(std::move(row));
  }
  if (rows.empty()) return cols > 0;
  Mat<Rat> m(rows);
  auto ker = m.kernel();
  if (ker.empty()) return false;
  if (section) *section = ker[0];
  return true;
}

namespace {

// Complement of {i, j} (1-based) inside {1..5}, 0-based output.
std::vector<int> complement5(int i, int j) {
  std::vector<int> out;
  for (int k = 1; k <= 5; ++k)
    if (k != i && k != j) out.push_back(k - 1);
  return out;
}

Rat small_rat(std::mt19937_64& rng) {
  return Rat((int)(rng() % 21) - 10, (int)(rng() % 6) + 1);
}

}  // namespace

ParabolicBundle conic_family_bundle(const PointConfig& config, const Rat& z0) {
  // Subbundle of degree -2 given by the section pair (z^2 + 1, z - z0);
  // the numerator never vanishes over the rationals, and the two
  // components meet the degree-0 factor exactly over z0.
  const auto& poles = config.poles();
  std::vector<ProjPoint> l;
  for (const P1Point& p : poles) {
    if (p.inf)
      l.push_back(ProjPoint({1, 1}));
    else
      l.push_back(ProjPoint({p.v * p.v + 1, p.v - z0}));
  }
  return ParabolicBundle(0, -1, std::move(l));
}

ParabolicBundle exceptional_family_bundle(const PointConfig& config, int i,
                                          std::mt19937_64& rng) {
  for (int attempt = 0; attempt < 64; ++attempt) {
    std::vector<ProjPoint> l;
    for (int k = 0; k < 5; ++k)
      l.push_back(k == i - 1 ? ProjPoint({1, 0}) : ProjPoint({small_rat(rng), 1}));
    ParabolicBundle b(0, -1, l);
    if (classify_special_bundle(b, config) != i) continue;
    // Stay away from the crossings with the line families so the sample
    // is a generic member.
    bool special = false;
    for (int a = 1; a <= 5 && !special; ++a)
      for (int c = a + 1; c <= 5 && !special; ++c)
        special = common_subbundle(b, config, complement5(a, c), -1);
    if (!special) return b;
  }
  throw std::domain_error("failed to sample the exceptional family");
}

ParabolicBundle line_family_bundle(const PointConfig& config, int i, int j, const Rat& z0,
                                   std::mt19937_64& rng) {
  const auto& poles = config.poles();
  for (int attempt = 0; attempt < 64; ++attempt) {
    std::vector<ProjPoint> l;
    bool bad = false;
    for (int k = 0; k < 5; ++k) {
      if (k == i - 1 || k == j - 1) {
        l.push_back(ProjPoint({small_rat(rng), 1}));
      } else if (poles[k].inf) {
        l.push_back(ProjPoint({1, 1}));
      } else {
        Rat s = poles[k].v - z0;
        if (s == 0 && poles[k].v == 0) bad = true;
        l.push_back(ProjPoint({s, 1}));
      }
    }
    if (bad) break;
    ParabolicBundle b(0, -1, l);
    if (classify_special_bundle(b, config) == CurveCatalog::line_index(i, j)) return b;
  }
  throw std::domain_error("failed to sample the line family");
}

ParabolicBundle point_bundle_Di(const PointConfig& config, int i) {
  std::vector<ProjPoint> l;
  for (int k = 0; k < config.n(); ++k)
    l.push_back(k == i - 1 ? ProjPoint({1, 1}) : ProjPoint({0, 1}));
  return ParabolicBundle(0, -1, std::move(l));
}

ParabolicBundle point_bundle_Dij(const PointConfig& config, int i, int j) {
  std::vector<Rat> picks = {1, 2, 5, 7, 11};
  std::vector<ProjPoint> l;
  int next = 0;
  for (int k = 0; k < 5; ++k) {
    if (k == i - 1 || k == j - 1)
      l.push_back(ProjPoint({1, 0}));
    else
      l.push_back(ProjPoint({picks[next++], 1}));
  }
  ParabolicBundle b(0, -1, std::move(l));
  std::vector<int> others = complement5(i, j);
  if (common_subbundle(b, config, others, -1))
    throw std::domain_error("representative hit a special line subbundle");
  if (!is_undecomposable(b, config)) throw std::domain_error("representative decomposes");
  return b;
}

ParabolicBundle point_bundle_D(const PointConfig& config) {
  std::vector<Rat> picks = {1, 2, 5, 7, 11};
  std::vector<ProjPoint> l;
  for (int k = 0; k < 5; ++k) l.push_back(ProjPoint({picks[k], 1}));
  ParabolicBundle b(1, -2, std::move(l));
  std::vector<int> all = {0, 1, 2, 3, 4};
  if (common_subbundle(b, config, all, -2))
    throw std::domain_error("representative admits a degree -2 interpolant");
  if (!is_undecomposable(b, config)) throw std::domain_error("representative decomposes");
  return b;
}

int classify_special_bundle(const ParabolicBundle& b, const PointConfig& config) {
  if (!(b.e1 == 0 && b.e2 == -1)) return -1;
  std::vector<int> all = {0, 1, 2, 3, 4};
  if (common_subbundle(b, config, all, -2)) return 0;
  std::vector<int> on_top;
  for (int k = 0; k < 5; ++k)
    if (b.l[k][1] == 0) on_top.push_back(k);
  if (on_top.size() == 1) return on_top[0] + 1;
  if (!on_top.empty()) return -1;
  int found = -1;
  for (int i = 1; i <= 5; ++i)
    for (int j = i + 1; j <= 5; ++j)
      if (common_subbundle(b, config, complement5(i, j), -1)) {
        if (found != -1) return -1;  // ambiguous, not a generic curve sample
        found = CurveCatalog::line_index(i, j);
      }
  return found;
}

// ---------------------------------------------------------------------------
// Pairs of elementary transformations.
// ---------------------------------------------------------------------------

std::vector<Rat> apply_quadratic_map(const std::vector<std::vector<Rat>>& quad,
                                     const std::vector<Rat>& b) {
  std::vector<Rat> m = {b[0] * b[0], b[0] * b[1], b[0] * b[2],
                        b[1] * b[1], b[1] * b[2], b[2] * b[2]};
  std::vector<Rat> out(3, Rat(0));
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 6; ++c) out[r] += quad[r][c] * m[c];
  return out;
}

namespace {

ParabolicBundle pair_transport(int i, int j, const ParabolicBundle& b,
                               const PointConfig& config) {
  return elm_minus_bundle(i - 1, elm_plus_bundle(j - 1, b, config), config);
}

}  // namespace

PairAction elm_pair_action(int i, int j, const PointConfig& config, uint64_t seed) {
  if (i == j || i < 1 || j < 1 || i > 5 || j > 5)
    throw std::invalid_argument("pair action needs two distinct pole indices");
  std::mt19937_64 rng(seed);
  PairAction act;
  act.i = i;
  act.j = j;

  // Generic transport samples for the quadratic fit.
  std::vector<std::pair<std::vector<Rat>, std::vector<Rat>>> samples;
  std::vector<Rat> t = config.custom();
  while (samples.size() < 30) {
    std::vector<Rat> u = {small_rat(rng), small_rat(rng)};
    try {
      std::vector<Rat> b = bun_coords(t, u);
      std::vector<Rat> u2 = u_from_bundle(pair_transport(i, j, chart_bundle(u), config), config);
      std::vector<Rat> b2 = bun_coords(t, u2);
      samples.push_back({proj_normalize(b), proj_normalize(b2)});
    } catch (const std::domain_error&) {
      continue;
    }
  }
  std::vector<std::vector<Rat>> rows;
  for (int k = 0; k < 10; ++k) {
    const auto& [b, b2] = samples[k];
    std::vector<Rat> m = {b[0] * b[0], b[0] * b[1], b[0] * b[2],
                          b[1] * b[1], b[1] * b[2], b[2] * b[2]};
    for (int r = 0; r < 3; ++r)
      for (int s = r + 1; s < 3; ++s) {
        std::vector<Rat> row(18, Rat(0));
        for (int c = 0; c < 6; ++c) {
          row[6 * r + c] += b2[s] * m[c];
          row[6 * s + c] -= b2[r] * m[c];
        }
        rows.push_back(std::move(row));
      }
  }
  auto ker = Mat<Rat>(rows).kernel();
  if (ker.size() != 1) throw std::domain_error("transport fit is not unique");
  act.quad.assign(3, std::vector<Rat>(6));
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 6; ++c) act.quad[r][c] = ker[0][6 * r + c];
  for (size_t k = 10; k < samples.size(); ++k) {
    const auto& [b, b2] = samples[k];
    if (!proj_equal(apply_quadratic_map(act.quad, b), b2))
      throw std::domain_error("transport fit failed verification");
  }

  // Permutation of the sixteen families.
  auto fresh_z0 = [&]() {
    while (true) {
      Rat z0 = small_rat(rng);
      bool ok = z0 != 0 && z0 != 1;
      for (const Rat& tv : t) ok = ok && z0 != tv;
      if (ok) return z0;
    }
  };
  act.perm.assign(16, -1);
  for (int src = 0; src < 16; ++src) {
    int target = -2;
    for (int sample = 0; sample < 2; ++sample) {
      ParabolicBundle b = [&]() {
        if (src == 0) return conic_family_bundle(config, fresh_z0());
        if (src <= 5) return exceptional_family_bundle(config, src, rng);
        for (int a = 1; a <= 5; ++a)
          for (int c = a + 1; c <= 5; ++c)
            if (CurveCatalog::line_index(a, c) == src)
              return line_family_bundle(config, a, c, fresh_z0(), rng);
        throw std::logic_error("bad catalog index");
      }();
      int cls = classify_special_bundle(pair_transport(i, j, b, config), config);
      if (cls < 0) throw std::domain_error("transported family sample is not special");
      if (target == -2)
        target = cls;
      else if (target != cls)
        throw std::domain_error("inconsistent transport classification");
    }
    act.perm[src] = target;
  }
  std::vector<bool> seen(16, false);
  for (int v : act.perm) {
    if (seen[v]) throw std::domain_error("transport did not induce a permutation");
    seen[v] = true;
  }
  return act;
}

GroupReport elm_pair_group(const PointConfig& config, uint64_t seed) {
  std::vector<std::vector<int>> gens;
  for (int i = 1; i <= 5; ++i)
    for (int j = i + 1; j <= 5; ++j)
      gens.push_back(elm_pair_action(i, j, config, seed + 17 * i + j).perm);
  std::vector<int> id(16);
  for (int k = 0; k < 16; ++k) id[k] = k;
  std::set<std::vector<int>> elements = {id};
  std::vector<std::vector<int>> frontier = {id};
  while (!frontier.empty()) {
    std::vector<std::vector<int>> next;
    for (const auto& p : frontier)
      for (const auto& g : gens) {
        std::vector<int> q(16);
        for (int k = 0; k < 16; ++k) q[k] = g[p[k]];
        if (elements.insert(q).second) next.push_back(std::move(q));
      }
    frontier = std::move(next);
  }
  GroupReport rep;
  rep.order = static_cast<int>(elements.size());
  rep.elements.assign(elements.begin(), elements.end());
  std::set<int> orbit;
  for (const auto& p : rep.elements) orbit.insert(p[0]);
  rep.transitive = orbit.size() == 16;
  return rep;
}

// ---------------------------------------------------------------------------
// Chart atlas.
// ---------------------------------------------------------------------------

bool ChartAtlas::membership(const std::string& entry, const std::string& chart) const {
  for (size_t e = 0; e < entry_names.size(); ++e)
    if (entry_names[e] == entry)
      for (size_t c = 0; c < chart_names.size(); ++c)
        if (chart_names[c] == chart) return member[e][c];
  throw std::out_of_range("unknown atlas entry or chart");
}

ChartAtlas chart_membership_table(const PointConfig& config, uint64_t seed) {
  std::mt19937_64 rng(seed);
  ChartAtlas atlas;
  atlas.chart_names.push_back("V");
  atlas.chart_weights.push_back(Weights(std::vector<Rat>(5, Rat(1, 4))));
  atlas.chart_names.push_back("V^");
  atlas.chart_weights.push_back(Weights(std::vector<Rat>(5, Rat(1, 2))));
  for (int i = 1; i <= 5; ++i) {
    std::vector<Rat> w(5, Rat(3, 4));
    w[i - 1] = Rat(1, 4);
    atlas.chart_names.push_back("V_" + std::to_string(i));
    atlas.chart_weights.push_back(Weights(std::move(w)));
  }

  std::vector<Rat> t = config.custom();
  auto fresh_z0 = [&]() {
    while (true) {
      Rat z0 = small_rat(rng);
      bool ok = z0 != 0 && z0 != 1;
      for (const Rat& tv : t) ok = ok && z0 != tv;
      if (ok) return z0;
    }
  };
  auto add_point = [&](const std::string& name, const ParabolicBundle& b) {
    atlas.entry_names.push_back(name);
    std::vector<bool> row;
    for (const Weights& w : atlas.chart_weights) row.push_back(is_stable(b, config, w));
    atlas.member.push_back(std::move(row));
  };
  auto add_family = [&](const std::string& name,
                        const std::function<ParabolicBundle()>& sample) {
    atlas.entry_names.push_back(name);
    std::vector<bool> row;
    for (const Weights& w : atlas.chart_weights) {
      bool first = is_stable(sample(), config, w);
      bool second = is_stable(sample(), config, w);
      if (first != second)
        throw std::domain_error("family samples disagree on stability in " + name);
      row.push_back(first);
    }
    atlas.member.push_back(std::move(row));
  };

  add_point("D", point_bundle_D(config));
  for (int i = 1; i <= 5; ++i) add_point("D_" + std::to_string(i), point_bundle_Di(config, i));
  for (int i = 1; i <= 5; ++i)
    for (int j = i + 1; j <= 5; ++j)
      add_point("D_{" + std::to_string(i) + "," + std::to_string(j) + "}",
                point_bundle_Dij(config, i, j));
  add_family("Pi", [&]() { return conic_family_bundle(config, fresh_z0()); });
  for (int i = 1; i <= 5; ++i)
    add_family("Pi_" + std::to_string(i),
               [&, i]() { return exceptional_family_bundle(config, i, rng); });
  for (int i = 1; i <= 5; ++i)
    for (int j = i + 1; j <= 5; ++j)
      add_family("Pi_{" + std::to_string(i) + "," + std::to_string(j) + "}",
                 [&, i, j]() { return line_family_bundle(config, i, j, fresh_z0(), rng); });
  return atlas;
}

// ---------------------------------------------------------------------------
// Degeneration over the rational function field.
// ---------------------------------------------------------------------------

namespace {

// Projective limit at the origin of a vector of rational functions.
std::vector<Rat> proj_limit_at_zero(const std::vector<QT>& v) {
  QT s = QT::variable();
  bool any = false;
  int m = 0;
  for (const QT& x : v)
    if (!x.is_zero()) {
      int o = x.order_at(Rat(0));
      m = any ? std::min(m, o) : o;
      any = true;
    }
  if (!any) throw std::domain_error("degeneration limit of the zero vector");
  std::vector<Rat> out;
  for (const QT& x : v) {
    if (x.is_zero()) {
      out.push_back(0);
      continue;
    }
    QT y = x;
    for (int k = 0; k < -m; ++k) y = y * s;
    for (int k = 0; k < m; ++k) y = y / s;
    out.push_back(y.eval(Rat(0)));
  }
  return out;
}

}  // namespace

DegenerationResult degeneration_limit(const Rat& t1, const Rat& t2, const Rat& rho,
                                      const Rat& kappa, const Rat& c1, const Rat& c2,
                                      const Rat& u2) {
  if (t1 == 0 || t1 == 1 || t2 == 0 || t2 == 1 || t1 == t2)
    throw std::invalid_argument("poles must stay distinct from 0, 1 and each other");
  Rat den = c2 * (u2 - t2) - rho - kappa;
  if (den == 0 || kappa == 0)
    throw std::domain_error("degeneration outside the genericity assumptions");
  DegenerationResult res;
  res.q2 = t2 * (c2 * (u2 - 1) - rho - kappa) / den;

  QT s = QT::variable();
  std::vector<QT> ts = {QT(t1), QT(t2)};
  std::vector<QT> us = {QT(1) / s, QT(u2)};
  std::vector<QT> cs = {QT(0) - s * QT(kappa) + s * s * QT(c1), QT(c2)};
  Poly<QT> P = apparent_polynomial(ts, QT(rho), us, QT(1), cs);
  std::vector<QT> a = {P.coeff(0), P.coeff(1), P.coeff(2)};
  std::vector<QT> b = bun_coords(ts, us);

  res.a_limit = proj_limit_at_zero(a);
  res.b_limit = proj_limit_at_zero(b);
  res.a_matches = proj_equal(res.a_limit, {t1 * res.q2, -(t1 + res.q2), Rat(1)});
  res.b_is_D1 = proj_equal(res.b_limit, {Rat(1), t1, t1 * t1});
  res.q1_limit_is_t1 =
      res.a_limit[2] * t1 * t1 + res.a_limit[1] * t1 + res.a_limit[0] == 0;

  std::vector<QT> uvw = {b[2] * (QT(t1 * t1) * a[2] + QT(t1) * a[1] + a[0]),
                         a[2] * (b[2] - QT(t1) * b[1]),
                         a[2] * (b[2] - QT(t1 * t1) * b[0])};
  res.uvw_limit = proj_limit_at_zero(uvw);
  std::vector<Rat> expected = {kappa * t1 * t1 * t2 * (t2 - 1) / den, t2 * (u2 - 1),
                               (t1 + t2) * u2 - (t1 + 1) * t2};
  res.uvw_matches = proj_equal(res.uvw_limit, expected);
  res.surface_holds = (rho + kappa) * res.uvw_limit[0] +
                          kappa * t1 * (t1 + res.q2) * res.uvw_limit[1] -
                          kappa * t1 * res.q2 * res.uvw_limit[2] ==
                      0;
  return res;
}

}  // namespace garnier
