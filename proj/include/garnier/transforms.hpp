#pragma once

/*
 * Rank-one twists and elementary transformations.
 *
 * An elementary transformation at a pole replaces the bundle by the
 * subsheaf of sections whose value at the pole lies on the parabolic
 * direction. On spectral data this is the swap-and-shift
 * (nu^+, nu^-) -> (nu^- + 1, nu^+) with degree d-1; on weights w -> 1-w;
 * on a matrix realization it is the gauge by diag(z-t, 1) in a frame
 * where the parabolic spans the second factor, performed here by an
 * explicit constant frame change followed by the diagonal gauge.
 *
 * Frame convention for realized connections: directions at finite poles
 * are coordinates in the global splitting frame of O(e1)+O(e2); at
 * infinity they refer to the leading-coefficient frame. Moving a
 * direction onto a factor uses a triangular automorphism, which exists
 * only in the direction of the larger factor, so the code branches on
 * the sign of e1-e2. The transformed data always satisfies the residue
 * conditions again; the frame itself is canonical only up to the
 * automorphism used, which matters when comparing a double Elm against
 * the corresponding twist.
 */

#include "garnier/connection.hpp"
#include "garnier/parabolic.hpp"

#include <array>
#include <stdexcept>
#include <vector>

namespace garnier {

// A line bundle with a rank-1 logarithmic lambda-connection: exponents
// mu_i over the poles, degree forced by the rank-1 Fuchs relation.
struct RankOneTwist {
  int degree;
  std::vector<Rat> mu;
  explicit RankOneTwist(std::vector<Rat> exponents);
  RankOneTwist inverse() const;
};

SpectralData twist(const SpectralData& sd, const RankOneTwist& tw);
SpectralData elm_minus(int i, const SpectralData& sd);
SpectralData elm_plus(int i, const SpectralData& sd);

Weights elm_weights(int i, const Weights& w);

// Tensor by a degree-k line bundle: splitting degrees shift, directions
// are untouched in the induced frames.
ParabolicBundle twist_bundle(const ParabolicBundle& b, int k);
ParabolicBundle elm_minus_bundle(int i, const ParabolicBundle& b, const PointConfig& config);
ParabolicBundle elm_plus_bundle(int i, const ParabolicBundle& b, const PointConfig& config);

// Whether two splitting presentations describe the same parabolic bundle:
// equal degrees and an automorphism diag(1, s) * [[1, q(z)], [0, 1]]
// (q of degree <= e1-e2) matching every direction.
bool bundle_equivalent(const ParabolicBundle& a, const ParabolicBundle& b,
                       const PointConfig& config);

// Degree-0 chart coordinates to the degree -1 chart reached by the
// elementary transformation at infinity: (u, 0, 1, inf) -> (u, 0, 1, 0).
std::vector<Rat> elm_chart_map_n(const PointConfig& config, const std::vector<Rat>& u);

// A matrix lambda-connection together with everything its residues are
// claimed to satisfy. Finite poles are listed explicitly; infinity is
// always a pole and occupies the last slot of l / nu_p / nu_m.
template <class F>
struct RealizedConnection {
  std::vector<F> poles;
  std::vector<std::array<F, 2>> l;
  std::vector<F> nu_p, nu_m;
  F lambda = F(1);
  int e1 = 0, e2 = 0;
  Mat2Form<F> A;

  int npoles() const { return static_cast<int>(l.size()); }
  int inf_index() const { return npoles() - 1; }

  SpectralReport verify() const {
    int m = static_cast<int>(poles.size());
    auto fail = [](const std::string& w) { return SpectralReport{false, "failure at " + w}; };
    for (int k = 0; k < m; ++k)
      if (!residue_matches(A.residue(poles[k]), lambda, nu_m[k], nu_p[k], l[k][0], l[k][1]))
        return fail("finite pole " + std::to_string(k));
    auto rinf = infinity_residue(A, e1, e2, lambda);
    if (!residue_matches(rinf, lambda, nu_m[m], nu_p[m], l[m][0], l[m][1]))
      return fail("infinity");
    F total = rinf[0][0] + rinf[1][1];
    for (int k = 0; k < m; ++k) {
      auto r = A.residue(poles[k]);
      total = total + r[0][0] + r[1][1];
    }
    if (!(total == -lambda * F(e1 + e2))) return fail("residue trace sum");
    return {};
  }
};

// The chart connection as a realized connection over its frame's bundle.
template <class F>
RealizedConnection<F> realize_chart(const ConnectionChart<F>& chart) {
  chart.validate();
  RealizedConnection<F> rc;
  rc.A = connection_matrix(chart);
  rc.lambda = chart.lambda;
  int n = chart.n();
  for (int i = 0; i < n - 3; ++i) {
    rc.poles.push_back(chart.t[i]);
    rc.l.push_back({chart.u[i], F(1)});
  }
  rc.poles.push_back(F(0));
  rc.l.push_back({F(0), F(1)});
  rc.poles.push_back(F(1));
  rc.l.push_back({F(1), F(1)});
  for (int i = 0; i < n - 1; ++i) {
    rc.nu_p.push_back(chart.nu_plus[i]);
    rc.nu_m.push_back(chart.nu_minus[i]);
  }
  rc.e1 = 0;
  if (chart.frame == Frame::DegMinus1) {
    rc.e2 = -1;
    rc.l.push_back({F(0), F(1)});
    rc.nu_p.push_back(chart.nu_plus[n - 1]);
    rc.nu_m.push_back(chart.nu_minus[n - 1]);
  } else {
    rc.e2 = 0;
    rc.l.push_back({F(1), F(0)});
    rc.nu_p.push_back(chart.nu_minus[n - 1]);
    rc.nu_m.push_back(chart.nu_plus[n - 1] - F(1));
  }
  return rc;
}

namespace detail {

template <class F>
Mat2Form<F> const_mat(const F& a, const F& b, const F& c, const F& d) {
  Mat2Form<F> m;
  m.at(0, 0) = RatFun<F>(a);
  m.at(0, 1) = RatFun<F>(b);
  m.at(1, 0) = RatFun<F>(c);
  m.at(1, 1) = RatFun<F>(d);
  return m;
}

}  // namespace detail

// Twist the realized connection by the rank-1 lambda-connection with
// exponent mu at pole k (k may be the infinity slot) and zero elsewhere.
template <class F>
RealizedConnection<F> twist_realized(RealizedConnection<F> rc, int k, int mu) {
  if (k < 0 || k >= rc.npoles()) throw std::out_of_range("twist pole index");
  F m(mu);
  rc.nu_p[k] = rc.nu_p[k] + m;
  rc.nu_m[k] = rc.nu_m[k] + m;
  rc.e1 -= mu;
  rc.e2 -= mu;
  if (k != rc.inf_index()) {
    RatFun<F> pole(Poly<F>::constant(rc.lambda * m), Poly<F>{F(0) - rc.poles[k], F(1)});
    rc.A.at(0, 0) = rc.A.at(0, 0) + pole;
    rc.A.at(1, 1) = rc.A.at(1, 1) + pole;
  }
  return rc;
}

template <class F>
RealizedConnection<F> elm_minus_realized(RealizedConnection<F> rc, int k) {
  if (k < 0 || k >= rc.npoles()) throw std::out_of_range("elm pole index");
  bool at_inf = k == rc.inf_index();
  F x = rc.l[k][0], y = rc.l[k][1];
  int m = static_cast<int>(rc.poles.size());

  // Step 1: a triangular automorphism moving the parabolic onto a factor.
  if (!(x == F(0)) && !(y == F(0))) {
    bool upper = rc.e1 >= rc.e2;  // Hom into the larger factor exists
    F s = upper ? x / y : y / x;
    int gap = upper ? rc.e1 - rc.e2 : rc.e2 - rc.e1;
    Poly<F> q = s * detail::wpow<F>(at_inf ? gap : 0).num();
    RatFun<F> qf = RatFun<F>::from_poly(q);
    Mat2Form<F> C, Cinv;
    if (upper) {
      C = detail::const_mat(F(1), F(0), F(0), F(1));
      C.at(0, 1) = qf;
      Cinv = C;
      Cinv.at(0, 1) = -qf;
    } else {
      C = detail::const_mat(F(1), F(0), F(0), F(1));
      C.at(1, 0) = qf;
      Cinv = C;
      Cinv.at(1, 0) = -qf;
    }
    rc.A = Cinv * rc.A * C;
    if (at_inf && gap > 0) {
      // The automorphism depends on z, so the gauge derivative enters.
      RatFun<F> dq = qf.derivative();
      if (upper)
        rc.A.at(0, 1) = rc.A.at(0, 1) + RatFun<F>(rc.lambda) * dq;
      else
        rc.A.at(1, 0) = rc.A.at(1, 0) + RatFun<F>(rc.lambda) * dq;
    }
    // Directions transform by C^{-1} evaluated at each pole.
    for (int j = 0; j < m; ++j) {
      F qv = at_inf ? s * detail::wpow<F>(gap).num().template eval<F>(rc.poles[j]) : s;
      if (upper)
        rc.l[j] = {rc.l[j][0] - qv * rc.l[j][1], rc.l[j][1]};
      else
        rc.l[j] = {rc.l[j][0], rc.l[j][1] - qv * rc.l[j][0]};
    }
    // At the infinity slot the automorphism acts through its leading part.
    bool inf_sees = at_inf || gap == 0;
    if (inf_sees) {
      if (upper)
        rc.l[m] = {rc.l[m][0] - s * rc.l[m][1], rc.l[m][1]};
      else
        rc.l[m] = {rc.l[m][0], rc.l[m][1] - s * rc.l[m][0]};
    }
    x = rc.l[k][0];
    y = rc.l[k][1];
  }

  // Step 2: drop the factor complementary to the parabolic.
  bool drop_first = !(y == F(0));  // parabolic now spans the second factor
  F swap_p = rc.nu_p[k], swap_m = rc.nu_m[k];
  rc.nu_p[k] = swap_m + F(1);
  rc.nu_m[k] = swap_p;
  if (at_inf) {
    if (drop_first) {
      rc.e1 -= 1;
      rc.l[k] = {F(1), F(0)};
    } else {
      rc.e2 -= 1;
      rc.l[k] = {F(0), F(1)};
    }
    return rc;
  }
  const F& p = rc.poles[k];
  Poly<F> lin{F(0) - p, F(1)};
  RatFun<F> zf = RatFun<F>::from_poly(lin);
  RatFun<F> dlog(Poly<F>::constant(rc.lambda), lin);
  if (drop_first) {
    rc.A.at(0, 0) = rc.A.at(0, 0) + dlog;
    rc.A.at(0, 1) = rc.A.at(0, 1) / zf;
    rc.A.at(1, 0) = rc.A.at(1, 0) * zf;
    rc.e1 -= 1;
    rc.l[k] = {F(1), F(0)};
    for (int j = 0; j < m; ++j)
      if (j != k) rc.l[j] = {rc.l[j][0], (rc.poles[j] - p) * rc.l[j][1]};
  } else {
    rc.A.at(1, 1) = rc.A.at(1, 1) + dlog;
    rc.A.at(1, 0) = rc.A.at(1, 0) / zf;
    rc.A.at(0, 1) = rc.A.at(0, 1) * zf;
    rc.e2 -= 1;
    rc.l[k] = {F(0), F(1)};
    for (int j = 0; j < m; ++j)
      if (j != k) rc.l[j] = {(rc.poles[j] - p) * rc.l[j][0], rc.l[j][1]};
  }
  return rc;
}

template <class F>
RealizedConnection<F> elm_plus_realized(RealizedConnection<F> rc, int k) {
  return twist_realized(elm_minus_realized(std::move(rc), k), k, -1);
}

}  // namespace garnier
