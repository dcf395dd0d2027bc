#include "garnier/parabolic.hpp"

#include "garnier/matrix.hpp"
#include "garnier/poly.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace garnier {

P1Point Mobius::apply(const P1Point& p) const {
  if (p.inf) {
    if (c == 0) return P1Point::infinity();
    return P1Point::finite(a / c);
  }
  Rat den = c * p.v + d;
  if (den == 0) return P1Point::infinity();
  return P1Point::finite((a * p.v + b) / den);
}

Mobius Mobius::to_standard(const P1Point& p, const P1Point& q, const P1Point& r) {
  // Cross-ratio map z -> ((z-p)(q-r)) / ((z-r)(q-p)), with the usual
  // degenerations when one of the three points is infinite.
  if (p.inf) return Mobius{0, q.v - r.v, 1, -r.v};
  if (q.inf) return Mobius{1, -p.v, 1, -r.v};
  if (r.inf) return Mobius{1, -p.v, 0, q.v - p.v};
  return Mobius{q.v - r.v, -p.v * (q.v - r.v), q.v - p.v, -r.v * (q.v - p.v)};
}

PointConfig::PointConfig(std::vector<Rat> custom) {
  for (size_t i = 0; i < custom.size(); ++i) {
    if (custom[i] == 0 || custom[i] == 1)
      throw std::invalid_argument("custom pole collides with a normalized pole");
    for (size_t j = i + 1; j < custom.size(); ++j)
      if (custom[i] == custom[j]) throw std::invalid_argument("repeated pole");
  }
  if (custom.size() + 3 < 4) throw std::invalid_argument("need at least 4 poles");
  for (const Rat& t : custom) poles_.push_back(P1Point::finite(t));
  poles_.push_back(P1Point::finite(0));
  poles_.push_back(P1Point::finite(1));
  poles_.push_back(P1Point::infinity());
  normalized_ = true;
}

PointConfig PointConfig::from_poles(std::vector<P1Point> poles) {
  for (size_t i = 0; i < poles.size(); ++i)
    for (size_t j = i + 1; j < poles.size(); ++j)
      if (poles[i] == poles[j]) throw std::invalid_argument("repeated pole");
  if (poles.empty()) throw std::invalid_argument("empty pole configuration");
  PointConfig cfg;
  cfg.poles_ = std::move(poles);
  int n = cfg.n();
  cfg.normalized_ = n >= 4 && cfg.poles_[n - 3] == P1Point::finite(0) &&
                    cfg.poles_[n - 2] == P1Point::finite(1) && cfg.poles_[n - 1].inf;
  if (cfg.normalized_)
    for (int i = 0; i < n - 3; ++i) cfg.normalized_ = cfg.normalized_ && !cfg.poles_[i].inf;
  return cfg;
}

std::pair<PointConfig, Mobius> PointConfig::normalized(const std::vector<P1Point>& poles) {
  int n = static_cast<int>(poles.size());
  if (n < 4) throw std::invalid_argument("need at least 4 poles to normalize");
  Mobius m = Mobius::to_standard(poles[n - 3], poles[n - 2], poles[n - 1]);
  std::vector<Rat> custom;
  for (int i = 0; i < n - 3; ++i) {
    P1Point img = m.apply(poles[i]);
    if (img.inf) throw std::logic_error("normalization sent a custom pole to infinity");
    custom.push_back(img.v);
  }
  return {PointConfig(std::move(custom)), m};
}

std::vector<Rat> PointConfig::custom() const {
  if (!normalized_) throw std::logic_error("custom() needs a normalized configuration");
  std::vector<Rat> out;
  for (int i = 0; i < n() - 3; ++i) out.push_back(poles_[i].v);
  return out;
}

SpectralData::SpectralData(std::vector<Rat> nu_plus, std::vector<Rat> nu_minus, int d)
    : plus_(std::move(nu_plus)), minus_(std::move(nu_minus)), d_(d) {
  if (plus_.size() != minus_.size() || plus_.empty())
    throw std::invalid_argument("exponent lists must match");
  Rat total = d_;
  for (size_t i = 0; i < plus_.size(); ++i) total += plus_[i] + minus_[i];
  if (total != 0) throw std::invalid_argument("Fuchs relation violated");
}

Rat SpectralData::rho() const {
  Rat r = 0;
  for (const Rat& m : minus_) r += m;
  return r;
}

Weights::Weights(std::vector<Rat> values) : w(std::move(values)) {
  for (const Rat& x : w)
    if (x < 0 || x > 1) throw std::invalid_argument("weight outside [0,1]");
}

ParabolicBundle::ParabolicBundle(int e1_, int e2_, std::vector<ProjPoint> dirs)
    : e1(e1_), e2(e2_), l(std::move(dirs)) {
  if (e1 < e2) throw std::invalid_argument("splitting degrees must satisfy e1 >= e2");
  for (const ProjPoint& p : l)
    if (p.dim() != 1) throw std::invalid_argument("parabolic direction must live in P^1");
}

Rat Wall::eval(const Weights& w) const {
  Rat v = d - 2 * k;
  std::vector<bool> in(w.n(), false);
  for (int i : I1) in[i] = true;
  for (int i = 0; i < w.n(); ++i) v += in[i] ? -w.w[i] : w.w[i];
  return v;
}

Rat stability_index(const ParabolicBundle& bundle, const Weights& w, int k,
                    const std::vector<int>& I) {
  Wall wall{bundle.degree(), k, I};
  return wall.eval(w);
}

namespace {

// Interpolation matrix for maps O(k) -> O(e1)+O(e2) hitting l_i for i in I.
// Columns: coefficients of f (degree <= e1-k) then of g (degree <= e2-k).
// Over the infinite pole the fiber in the flipped chart is read off the
// leading coefficient slots.
Mat<Rat> interpolation_matrix(const ParabolicBundle& bundle, const PointConfig& config,
                              int k, const std::vector<int>& I, int nf, int ng) {
  Mat<Rat> m(static_cast<int>(I.size()), nf + ng);
  for (size_t row = 0; row < I.size(); ++row) {
    int i = I[row];
    const Rat& x = bundle.l[i][0];
    const Rat& y = bundle.l[i][1];
    const P1Point& t = config.poles()[i];
    if (t.inf) {
      if (nf > 0) m.at(row, nf - 1) = y;
      if (ng > 0) m.at(row, nf + ng - 1) = -x;
    } else {
      Rat p = 1;
      for (int j = 0; j < nf; ++j, p *= t.v) m.at(row, j) = y * p;
      p = 1;
      for (int j = 0; j < ng; ++j, p *= t.v) m.at(row, nf + j) = -x * p;
    }
  }
  return m;
}

struct SectionPair {
  Poly<Rat> f, g;
};

SectionPair split_section(const std::vector<Rat>& v, int nf, int ng) {
  std::vector<Rat> fc(v.begin(), v.begin() + nf);
  std::vector<Rat> gc(v.begin() + nf, v.begin() + nf + ng);
  return {Poly<Rat>(std::move(fc)), Poly<Rat>(std::move(gc))};
}

// A section is a saturated degree-k subbundle iff it never vanishes as a
// fiber vector: no common finite root and no common leading-coefficient
// drop at infinity.
bool saturated(const SectionPair& s, int nf, int ng) {
  if (s.f.is_zero() && s.g.is_zero()) return false;
  Poly<Rat> h = s.f.is_zero() ? s.g : (s.g.is_zero() ? s.f : gcd(s.f, s.g));
  if (h.degree() > 0) return false;
  bool top_f = nf > 0 && s.f.coeff(nf - 1) != 0;
  bool top_g = ng > 0 && s.g.coeff(ng - 1) != 0;
  return top_f || top_g;
}

bool fibers_match(const SectionPair& s, const ParabolicBundle& bundle,
                  const PointConfig& config, int nf, int ng, const std::vector<int>& I) {
  for (int i : I) {
    const P1Point& t = config.poles()[i];
    Rat fv, gv;
    if (t.inf) {
      fv = nf > 0 ? s.f.coeff(nf - 1) : Rat(0);
      gv = ng > 0 ? s.g.coeff(ng - 1) : Rat(0);
    } else {
      fv = s.f.eval<Rat>(t.v);
      gv = s.g.eval<Rat>(t.v);
    }
    if (fv == 0 && gv == 0) return false;
    if (fv * bundle.l[i][1] != gv * bundle.l[i][0]) return false;
  }
  return true;
}

}  // namespace

SubbundleWitness subbundle_exists(const ParabolicBundle& bundle, const PointConfig& config,
                                  int k, const std::vector<int>& I) {
  if (k > bundle.e1) return {};
  if (bundle.n() != config.n()) throw std::invalid_argument("bundle/config size mismatch");
  int nf = std::max(bundle.e1 - k + 1, 0);
  int ng = std::max(bundle.e2 - k + 1, 0);
  if (nf + ng == 0) return {};
  Mat<Rat> m = interpolation_matrix(bundle, config, k, I, nf, ng);
  auto basis = m.kernel();
  if (basis.empty()) return {};
  // Generic combinations along the moment curve reach the generic gcd of
  // the solution family; if none is saturated at degree k, the subbundles
  // through I all live in higher degree.
  for (int s = 0; s <= 60; ++s) {
    std::vector<Rat> v(nf + ng, 0);
    Rat pw = 1;
    for (const auto& bvec : basis) {
      for (size_t j = 0; j < v.size(); ++j) v[j] += pw * bvec[j];
      pw *= s;
    }
    SectionPair sec = split_section(v, nf, ng);
    if (!saturated(sec, nf, ng)) continue;
    if (!fibers_match(sec, bundle, config, nf, ng, I)) continue;
    SubbundleWitness out;
    out.exists = true;
    out.f = sec.f.coeffs();
    out.g = sec.g.coeffs();
    return out;
  }
  return {};
}

namespace {

bool stability_scan(const ParabolicBundle& bundle, const PointConfig& config,
                    const Weights& w, bool strict) {
  int n = bundle.n();
  if (n != w.n() || n != config.n()) throw std::invalid_argument("size mismatch");
  if (n > 10) throw std::invalid_argument("stability scan capped at n = 10");
  int d = bundle.degree();
  // Subbundles with d - 2k > n have index above n * max(w); harmless.
  int kmin = (d - n) / 2 - 1;
  for (int k = kmin; k <= bundle.e1; ++k) {
    for (uint32_t mask = 0; mask < (1u << n); ++mask) {
      std::vector<int> I;
      for (int i = 0; i < n; ++i)
        if (mask & (1u << i)) I.push_back(i);
      Rat idx = stability_index(bundle, w, k, I);
      bool bad = strict ? idx <= 0 : idx < 0;
      if (!bad) continue;
      if (subbundle_exists(bundle, config, k, I).exists) return false;
    }
  }
  return true;
}

}  // namespace

bool is_stable(const ParabolicBundle& bundle, const PointConfig& config, const Weights& w) {
  return stability_scan(bundle, config, w, true);
}

bool is_semistable(const ParabolicBundle& bundle, const PointConfig& config, const Weights& w) {
  return stability_scan(bundle, config, w, false);
}

bool is_undecomposable(const ParabolicBundle& bundle, const PointConfig& config) {
  int n = bundle.n();
  if (n != config.n()) throw std::invalid_argument("size mismatch");
  if (bundle.e1 == bundle.e2) {
    // Equal splitting: degree-e1 subbundles are the constant directions, so
    // a decomposition exists iff at most two distinct parabolics occur.
    std::set<ProjPoint> distinct(bundle.l.begin(), bundle.l.end());
    return distinct.size() > 2;
  }
  // Unequal splitting: the degree-e1 subbundle is the first factor, with
  // fiber (1:0) everywhere. A complement O(e2) = (f, 1) must interpolate
  // every parabolic off that factor: an inhomogeneous linear system for f.
  ProjPoint first({1, 0});
  std::vector<int> I2;
  for (int i = 0; i < n; ++i)
    if (bundle.l[i] != first) I2.push_back(i);
  int nf = bundle.e1 - bundle.e2;  // deg f <= e1 - e2
  Mat<Rat> m(static_cast<int>(I2.size()), nf + 1);
  std::vector<Rat> rhs;
  for (size_t row = 0; row < I2.size(); ++row) {
    int i = I2[row];
    const P1Point& t = config.poles()[i];
    if (t.inf) {
      m.at(row, nf) = 1;
    } else {
      Rat p = 1;
      for (int j = 0; j <= nf; ++j, p *= t.v) m.at(row, j) = p;
    }
    rhs.push_back(bundle.l[i][0] / bundle.l[i][1]);
  }
  return !m.solve(rhs).has_value();
}

std::optional<Weights> exists_stabilizing_weight(const ParabolicBundle& bundle,
                                                 const PointConfig& config) {
  if (!is_undecomposable(bundle, config)) return std::nullopt;
  int n = bundle.n();
  std::vector<Weights> candidates;
  Weights democratic(std::vector<Rat>(n, (Rat(1, n) + Rat(1, n - 2)) / 2));
  bool odd = ((bundle.degree() % 2) + 2) % 2 == 1;
  if (odd) candidates.push_back(democratic);
  // Chamber representatives in the style of the exhaustive weight family:
  // three indices at 1/2, the rest at 0 or 1.
  for (int pad = 0; pad < (1 << 1); ++pad) {
    for (uint32_t rest = 0; rest < (pad ? (1u << n) : 1u); ++rest) {
      for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
          for (int c = b + 1; c < n; ++c) {
            std::vector<Rat> w(n, 0);
            for (int i = 0; i < n; ++i)
              if (pad && (rest & (1u << i))) w[i] = 1;
            w[a] = w[b] = w[c] = Rat(1, 2);
            candidates.emplace_back(std::move(w));
          }
    }
  }
  if (!odd) candidates.push_back(democratic);
  for (const Weights& w : candidates)
    if (is_stable(bundle, config, w)) return w;
  return std::nullopt;
}

bool genericity_check(const SpectralData& sd) {
  int n = sd.n();
  if (n > 20) throw std::invalid_argument("genericity check capped at n = 20");
  for (uint32_t mask = 0; mask < (1u << n); ++mask) {
    Rat sum = 0;
    for (int i = 0; i < n; ++i) sum += (mask & (1u << i)) ? sd.nu_plus(i) : sd.nu_minus(i);
    if (is_integer(sum)) return false;
  }
  return true;
}

bool main_chart_membership(const ParabolicBundle& bundle, const PointConfig& config) {
  if (bundle.e1 != 0 || bundle.e2 != -1) return false;
  ProjPoint factor({1, 0});
  for (const ProjPoint& li : bundle.l)
    if (li == factor) return false;
  // All parabolics on one O(-1) would make the bundle a non-chart point;
  // such an interpolant is a nonzero kernel vector of the full system.
  std::vector<int> all;
  for (int i = 0; i < bundle.n(); ++i) all.push_back(i);
  Mat<Rat> m = interpolation_matrix(bundle, config, -1, all, 2, 1);
  return m.kernel().empty();
}

ParabolicBundle wall_crossing_family(const Rat& eps, const std::vector<int>& I1, int n,
                                     const std::vector<Rat>& u, const std::vector<Rat>& v) {
  std::vector<bool> in(n, false);
  for (int i : I1) in[i] = true;
  std::vector<ProjPoint> dirs;
  for (int i = 0; i < n; ++i) {
    if (in[i])
      dirs.push_back(ProjPoint({1, eps * v[i]}));
    else
      dirs.push_back(ProjPoint({eps * u[i], 1}));
  }
  return ParabolicBundle(0, 0, std::move(dirs));
}

}  // namespace garnier
