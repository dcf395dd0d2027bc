#pragma once

/*
 * The two Lagrangian maps and their joint inverse.
 *
 * App sends a chart connection to the divisor of its apparent
 * singularities: the numerator P(z) of the lower-left matrix entry,
 * a polynomial of degree n-3 whose coefficients (a_0 : ... : a_{n-3})
 * in the monomial basis give a point of a projective space. Bun sends
 * the underlying parabolic bundle to the point b of the dual space cut
 * out by the linear forms P_i attached to the parabolic coordinates.
 * The pairing sum a_k b_k cuts the incidence variety, which is exactly
 * the locus of Higgs fields; away from it the pair (a, b) determines
 * the connection uniquely and the inverse is a linear solve.
 *
 * Darboux coordinates: q runs over the apparent singular points, and the
 * dual variable p is evaluated by an explicit rational formula. The
 * symplectic checks push all formulas through first-order jets; second
 * derivatives cancel in the antisymmetrized 2-form coefficients, so
 * first order is enough for exact verification.
 *
 * Everything is templated on the scalar field: Q for the test suites,
 * Q(t) for pencils and one-parameter limits, jets for the 2-forms.
 */

#include "garnier/connection.hpp"
#include "garnier/jet.hpp"
#include "garnier/matrix.hpp"
#include "garnier/parabolic.hpp"

#include <stdexcept>
#include <utility>
#include <vector>

namespace garnier {

// prod_{j != skip} (z - t_j).
template <class F>
Poly<F> pole_product(const std::vector<F>& t, int skip = -1) {
  Poly<F> p = Poly<F>::constant(F(1));
  for (int j = 0; j < static_cast<int>(t.size()); ++j)
    if (j != skip) p = p * Poly<F>{F(0) - t[j], F(1)};
  return p;
}

// P_i(z) = [(u_i - t_i) z + (1 - u_i) t_i] * prod_{j != i} (z - t_j).
template <class F>
Poly<F> bun_row_poly(const std::vector<F>& t, const F& ui, int i) {
  Poly<F> lin{(F(1) - ui) * t[i], ui - t[i]};
  return lin * pole_product(t, i);
}

template <class F>
Poly<F> apparent_polynomial(const std::vector<F>& t, const F& rho, const std::vector<F>& u,
                            const F& lambda, const std::vector<F>& c) {
  int m = static_cast<int>(t.size());
  if (static_cast<int>(u.size()) != m || static_cast<int>(c.size()) != m)
    throw std::invalid_argument("apparent polynomial input size mismatch");
  Poly<F> p = (F(0) - lambda * rho) * pole_product(t);
  for (int i = 0; i < m; ++i) p = p + c[i] * bun_row_poly(t, u[i], i);
  return p;
}

template <class F>
Poly<F> apparent_polynomial(const ConnectionChart<F>& chart) {
  return apparent_polynomial(chart.t, chart.rho(), chart.u, chart.lambda, chart.c);
}

// Coefficient vector (a_0 .. a_{n-3}) of the apparent polynomial. Throws
// on the indeterminacy locus where the polynomial vanishes identically.
template <class F>
std::vector<F> app_coords(const ConnectionChart<F>& chart) {
  Poly<F> p = apparent_polynomial(chart);
  if (p.is_zero()) throw std::domain_error("apparent map undefined: the entry vanishes identically");
  int m = static_cast<int>(chart.t.size());
  std::vector<F> a;
  for (int k = 0; k <= m; ++k) a.push_back(p.coeff(k));
  return a;
}

inline ProjPoint app(const ConnectionChart<Rat>& chart) { return ProjPoint(app_coords(chart)); }

// Kernel of the (n-3) x (n-2) matrix of P_i coefficients; the bundle-side
// coordinates b = (b_0 : ... : b_{n-3}).
template <class F>
std::vector<F> bun_coords(const std::vector<F>& t, const std::vector<F>& u) {
  int m = static_cast<int>(t.size());
  if (static_cast<int>(u.size()) != m) throw std::invalid_argument("bun input size mismatch");
  std::vector<std::vector<F>> rows;
  for (int i = 0; i < m; ++i) {
    Poly<F> p = bun_row_poly(t, u[i], i);
    std::vector<F> row;
    for (int k = 0; k <= m; ++k) row.push_back(p.coeff(k));
    rows.push_back(std::move(row));
  }
  auto ker = Mat<F>(std::move(rows)).kernel();
  if (ker.size() != 1) throw std::domain_error("bundle outside the main chart: kernel dimension != 1");
  return ker[0];
}

inline ProjPoint bun(const PointConfig& config, const std::vector<Rat>& u) {
  return ProjPoint(bun_coords(config.custom(), u));
}

// Inverse of Bun: each parabolic coordinate from the single root mu_i of
// the linear equation sum_k b_k [(z - mu) prod_{j != i}(z - t_j)]_k = 0.
template <class F>
std::vector<F> bun_inverse(const std::vector<F>& t, const std::vector<F>& b) {
  int m = static_cast<int>(t.size());
  if (static_cast<int>(b.size()) != m + 1) throw std::invalid_argument("bun_inverse input size mismatch");
  std::vector<F> u;
  for (int i = 0; i < m; ++i) {
    Poly<F> q = pole_product(t, i);
    Poly<F> zq = Poly<F>{F(0), F(1)} * q;
    F num(0), den(0);
    for (int k = 0; k <= m; ++k) {
      num = num + b[k] * zq.coeff(k);
      den = den + b[k] * q.coeff(k);
    }
    if (den == F(0)) throw std::domain_error("bundle outside the chart: degenerate mu equation");
    F mu = num / den;
    if (mu == t[i]) throw std::domain_error("bundle outside the chart: mu collides with the pole");
    u.push_back(t[i] * (mu - F(1)) / (mu - t[i]));
  }
  return u;
}

template <class F>
F incidence_pairing(const std::vector<F>& a, const std::vector<F>& b) {
  if (a.size() != b.size()) throw std::invalid_argument("pairing size mismatch");
  F s(0);
  for (size_t k = 0; k < a.size(); ++k) s = s + a[k] * b[k];
  return s;
}

inline Rat incidence_pairing(const ProjPoint& a, const ProjPoint& b) {
  return incidence_pairing(a.coords(), b.coords());
}

template <class F>
struct SolvedConnection {
  F lambda;
  std::vector<F> c;
  std::vector<F> u;
};

// Joint inverse of App x Bun: recover u from b, then solve the linear
// system expressing the apparent coefficients as a multiple of a. The
// lambda component vanishes exactly on the incidence variety.
template <class F>
SolvedConnection<F> solve_connection(const std::vector<F>& t, const F& rho,
                                     const std::vector<F>& a, const std::vector<F>& b) {
  int m = static_cast<int>(t.size());
  if (static_cast<int>(a.size()) != m + 1) throw std::invalid_argument("solve input size mismatch");
  std::vector<F> u = bun_inverse(t, b);
  // Unknowns (lambda, c_1..c_m, s): coeffs(P(lambda, c)) - s * a = 0.
  Mat<F> M(m + 1, m + 2);
  Poly<F> lead = (F(0) - rho) * pole_product(t);
  for (int k = 0; k <= m; ++k) M.at(k, 0) = lead.coeff(k);
  for (int i = 0; i < m; ++i) {
    Poly<F> p = bun_row_poly(t, u[i], i);
    for (int k = 0; k <= m; ++k) M.at(k, i + 1) = p.coeff(k);
  }
  for (int k = 0; k <= m; ++k) M.at(k, m + 1) = F(0) - a[k];
  auto ker = M.kernel();
  if (ker.size() != 1) throw std::domain_error("duality solve degenerate");
  std::vector<F>& v = ker[0];
  if (v[m + 1] == F(0)) throw std::domain_error("apparent coefficients not realizable over this bundle");
  SolvedConnection<F> out;
  out.lambda = v[0] / v[m + 1];
  for (int i = 0; i < m; ++i) out.c.push_back(v[i + 1] / v[m + 1]);
  out.u = std::move(u);
  return out;
}

// Dual variable of an apparent singular point q.
template <class F>
F darboux_p(const std::vector<F>& t, const F& rho, const std::vector<F>& u,
            const std::vector<F>& c, const F& q) {
  if (q == F(1)) throw std::domain_error("dual variable undefined at the pole 1");
  F p = (F(0) - rho) / (q - F(1));
  for (size_t i = 0; i < t.size(); ++i) {
    F w = c[i] * u[i];
    if (w == F(0)) continue;  // the singular term drops out
    if (q == t[i]) throw std::domain_error("dual variable undefined at a pole");
    p = p + w * (F(1) / (q - F(1)) - F(1) / (q - t[i]));
  }
  return p;
}

// Higgs coefficients from prescribed apparent roots, at lambda = 1:
// the linear system P(q_k) = 0.
template <class F>
std::vector<F> c_from_qu(const std::vector<F>& t, const F& rho, const std::vector<F>& u,
                         const std::vector<F>& q) {
  int m = static_cast<int>(t.size());
  if (static_cast<int>(q.size()) != m) throw std::invalid_argument("c_from_qu input size mismatch");
  Mat<F> M(m, m);
  std::vector<F> rhs;
  Poly<F> lead = pole_product(t);
  for (int k = 0; k < m; ++k) {
    for (int i = 0; i < m; ++i) M.at(k, i) = bun_row_poly(t, u[i], i).template eval<F>(q[k]);
    rhs.push_back(rho * lead.template eval<F>(q[k]));
  }
  auto x = M.solve(rhs);
  if (!x || M.rank() != m) throw std::domain_error("apparent roots not realizable from this bundle");
  return *x;
}

// Antisymmetric coefficient matrices of the three 2-forms at a sample
// point, in the coordinates (q_1..q_m, u_1..u_m).
template <class F>
struct SymplecticSample {
  std::vector<std::vector<F>> pq, cu, omega;
  bool pq_equals_cu = false, omega_matches = false;
};

template <class F>
SymplecticSample<F> symplectic_sample(const std::vector<F>& t, const F& rho,
                                      const std::vector<F>& q, const std::vector<F>& u) {
  using J = Jet<F>;
  int m = static_cast<int>(t.size());
  int vars = 2 * m;
  std::vector<J> tj, qj, uj;
  for (const F& v : t) tj.push_back(J::constant(v, vars));
  for (int i = 0; i < m; ++i) qj.push_back(J::variable(q[i], i, vars));
  for (int i = 0; i < m; ++i) uj.push_back(J::variable(u[i], m + i, vars));
  J rhoj = J::constant(rho, vars);

  std::vector<J> cj = c_from_qu(tj, rhoj, uj, qj);
  std::vector<J> pj;
  for (int k = 0; k < m; ++k) pj.push_back(darboux_p(tj, rhoj, uj, cj, qj[k]));
  std::vector<J> aj;
  {
    Poly<J> pa = apparent_polynomial(tj, rhoj, uj, J(1), cj);
    for (int k = 0; k <= m; ++k) aj.push_back(pa.coeff(k));
  }
  std::vector<J> bj = bun_coords(tj, uj);
  J S = incidence_pairing(aj, bj);

  auto wedge = [&](const std::vector<J>& x, const std::vector<J>& y) {
    std::vector<std::vector<F>> w(vars, std::vector<F>(vars, F(0)));
    for (int al = 0; al < vars; ++al)
      for (int be = 0; be < vars; ++be)
        for (size_t k = 0; k < x.size(); ++k)
          w[al][be] = w[al][be] + x[k].partial(al) * y[k].partial(be) -
                      x[k].partial(be) * y[k].partial(al);
    return w;
  };

  SymplecticSample<F> out;
  out.pq = wedge(pj, qj);
  out.cu = wedge(cj, uj);
  // omega = rho * d(sum a_k db_k / sum a_k b_k); the second-derivative
  // terms of b are symmetric in (alpha, beta) and drop out.
  out.omega.assign(vars, std::vector<F>(vars, F(0)));
  std::vector<F> adb(vars, F(0));  // sum_k a_k d_beta b_k
  for (int be = 0; be < vars; ++be)
    for (size_t k = 0; k < aj.size(); ++k) adb[be] = adb[be] + aj[k].val * bj[k].partial(be);
  auto dadb = wedge(aj, bj);
  // At rho = 0 the whole form carries the factor rho and vanishes; the
  // pairing degenerates there too, so skip the division.
  if (!(rho == F(0))) {
    for (int al = 0; al < vars; ++al)
      for (int be = 0; be < vars; ++be)
        out.omega[al][be] = rho * dadb[al][be] / S.val -
                            rho * (adb[be] * S.partial(al) - adb[al] * S.partial(be)) /
                                (S.val * S.val);
  }
  out.pq_equals_cu = out.pq == out.cu;
  out.omega_matches = out.pq == out.omega;
  return out;
}

// The nondegenerate identity dp^dq = dc^du, plus omega = rho d(...) when
// rho != 0 (the right side is identically zero at rho = 0).
template <class F>
bool symplectic_check(const std::vector<F>& t, const F& rho, const std::vector<F>& q,
                      const std::vector<F>& u) {
  SymplecticSample<F> s = symplectic_sample(t, rho, q, u);
  if (!s.pq_equals_cu) return false;
  if (rho == F(0)) {
    for (const auto& row : s.omega)
      for (const F& v : row)
        if (!(v == F(0))) return false;
    return true;
  }
  return s.omega_matches;
}

// The rho = 0 regime: the apparent map ignores lambda entirely.
template <class F>
bool degenerate_rho0_check(const std::vector<F>& t, const std::vector<F>& u,
                           const std::vector<F>& c, const std::vector<F>& lambdas) {
  std::vector<F> base;
  {
    Poly<F> p = apparent_polynomial(t, F(0), u, F(0), c);
    if (p.is_zero()) throw std::domain_error("apparent map undefined: zero Higgs field");
    for (int k = 0; k <= static_cast<int>(t.size()); ++k) base.push_back(p.coeff(k));
  }
  for (const F& lam : lambdas) {
    Poly<F> p = apparent_polynomial(t, F(0), u, lam, c);
    std::vector<F> a;
    for (int k = 0; k <= static_cast<int>(t.size()); ++k) a.push_back(p.coeff(k));
    if (!proj_equal(a, base)) return false;
  }
  // The image lies on the incidence variety: the pairing with Bun of the
  // same bundle vanishes by the kernel construction.
  return incidence_pairing(base, bun_coords(t, u)) == F(0);
}

// Closed forms for one custom pole. Forward: chart data to Darboux pair;
// inverse solves back. mu_map is the parabolic/apparent involution.
template <class F>
std::pair<F, F> n4_forward(const F& t, const F& rho, const F& u, const F& c) {
  F den = rho + c * (t - u);
  if (t == F(0) || t == F(1) || den == F(0)) throw std::domain_error("n4 forward degenerate");
  F p = (F(0) - (t - u)) * (rho + c * (t - u)) / (t * (t - F(1)));
  F q = t * (rho + c * (F(1) - u)) / den;
  return {p, q};
}

template <class F>
std::pair<F, F> n4_inverse(const F& t, const F& rho, const F& p, const F& q) {
  F den = rho + p * (q - t);
  if (t == F(0) || t == F(1) || den == F(0)) throw std::domain_error("n4 inverse degenerate");
  F u = t * (rho + p * (q - F(1))) / den;
  F c = (F(0) - (q - t)) * (rho + p * (q - t)) / (t * (t - F(1)));
  return {u, c};
}

template <class F>
F mu_map(const F& t, const F& x) {
  if (x == t) throw std::domain_error("mu involution pole");
  return t * (x - F(1)) / (x - t);
}

}  // namespace garnier
