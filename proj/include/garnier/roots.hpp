#pragma once

/*
 * Rational root extraction for Q-coefficient polynomials. Candidates p/q
 * come from divisors of the (integer-cleared) constant and leading
 * coefficients; confirmed roots are divided out with multiplicity and the
 * root-free cofactor is reported. Nothing is ever approximated: an
 * irrational root simply stays inside the remainder.
 */

#include "garnier/matrix.hpp"
#include "garnier/poly.hpp"
#include "garnier/projpoint.hpp"

#include <algorithm>

namespace garnier {

struct RootReport {
  std::vector<Rat> roots;  // with multiplicity, sorted
  Poly<Rat> remainder;     // no rational roots left
};

namespace detail {
inline std::vector<Int> positive_divisors(Int n) {
  if (n < 0) n = -n;
  std::vector<Int> divs;
  for (Int d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      divs.push_back(d);
      if (d * d != n) divs.push_back(n / d);
    }
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}
}  // namespace detail

inline RootReport rational_roots(const Poly<Rat>& p) {
  if (p.is_zero()) throw std::domain_error("rational_roots of the zero polynomial");
  RootReport rep;
  Poly<Rat> q = p;
  // Factor out z^k first.
  while (q.coeff(0) == 0 && q.degree() > 0) {
    rep.roots.push_back(0);
    q = divmod(q, Poly<Rat>{0, 1}).first;
  }
  if (q.degree() > 0) {
    // Clear denominators so candidates are divisor ratios.
    Int l = 1;
    for (const Rat& c : q.coeffs()) l = lcm(l, denominator(c));
    Int a0 = numerator(q.coeff(0)) * (l / denominator(q.coeff(0)));
    Int am = numerator(q.leading()) * (l / denominator(q.leading()));
    for (const Int& pnum : detail::positive_divisors(a0)) {
      for (const Int& pden : detail::positive_divisors(am)) {
        for (int sign : {1, -1}) {
          Rat cand(sign * pnum, pden);
          while (q.degree() > 0 && q.template eval<Rat>(cand) == 0) {
            rep.roots.push_back(cand);
            q = divmod(q, Poly<Rat>{-cand, 1}).first;
          }
        }
      }
    }
  }
  std::sort(rep.roots.begin(), rep.roots.end());
  rep.remainder = q;
  return rep;
}

// Null-space basis as canonical projective points.
inline std::vector<ProjPoint> kernel_points(const Mat<Rat>& m) {
  std::vector<ProjPoint> pts;
  for (auto& v : m.kernel()) pts.emplace_back(std::move(v));
  return pts;
}

}  // namespace garnier
