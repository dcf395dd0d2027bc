#pragma once

/*
 * Dense univariate polynomials over an exact field F.
 *
 * The coefficient list is kept normalized (no trailing zeros), so
 * deg(fg) = deg f + deg g holds on the nose for nonzero f, g. The zero
 * polynomial has degree -1 by convention.
 */

#include "garnier/rational.hpp"

#include <initializer_list>
#include <string>
#include <vector>

namespace garnier {

template <class F>
class Poly {
 public:
  Poly() = default;
  Poly(std::initializer_list<F> cs) : c_(cs) { strip(); }
  explicit Poly(std::vector<F> cs) : c_(std::move(cs)) { strip(); }
  static Poly constant(const F& a) { return Poly(std::vector<F>{a}); }
  // The monomial a * z^k.
  static Poly monomial(const F& a, int k) {
    std::vector<F> cs(k + 1, F(0));
    cs[k] = a;
    return Poly(std::move(cs));
  }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<F>& coeffs() const { return c_; }
  // Coefficient of z^k, zero beyond the degree.
  F coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(c_.size())) return F(0);
    return c_[k];
  }
  F leading() const { return c_.empty() ? F(0) : c_.back(); }

  // Horner evaluation in any ring G that embeds F (G itself, Jet, RatFun).
  template <class G>
  G eval(const G& x) const {
    G acc(0);
    for (int k = degree(); k >= 0; --k) acc = acc * x + G(c_[k]);
    return acc;
  }

  Poly derivative() const {
    std::vector<F> d;
    for (int k = 1; k <= degree(); ++k) d.push_back(c_[k] * F(k));
    return Poly(std::move(d));
  }

  friend Poly operator+(const Poly& a, const Poly& b) {
    std::vector<F> s(std::max(a.c_.size(), b.c_.size()), F(0));
    for (size_t i = 0; i < a.c_.size(); ++i) s[i] = s[i] + a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i) s[i] = s[i] + b.c_[i];
    return Poly(std::move(s));
  }
  friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }
  Poly operator-() const {
    std::vector<F> s(c_);
    for (auto& x : s) x = F(0) - x;
    return Poly(std::move(s));
  }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<F> s(a.c_.size() + b.c_.size() - 1, F(0));
    for (size_t i = 0; i < a.c_.size(); ++i)
      for (size_t j = 0; j < b.c_.size(); ++j) s[i + j] = s[i + j] + a.c_[i] * b.c_[j];
    return Poly(std::move(s));
  }
  friend Poly operator*(const F& a, const Poly& b) { return Poly::constant(a) * b; }
  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  // Euclidean division: a = q*b + r with deg r < deg b.
  friend std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    Poly r = a;
    std::vector<F> q(a.c_.size() > b.c_.size() ? a.c_.size() - b.c_.size() + 1 : 1, F(0));
    while (!r.is_zero() && r.degree() >= b.degree()) {
      int k = r.degree() - b.degree();
      F f = r.leading() / b.leading();
      q[k] = q[k] + f;
      r = r - Poly::monomial(f, k) * b;
    }
    return {Poly(std::move(q)), r};
  }

  Poly monic() const {
    if (is_zero()) return *this;
    F inv = F(1) / leading();
    std::vector<F> s(c_);
    for (auto& x : s) x = x * inv;
    return Poly(std::move(s));
  }

  // Monic gcd by the Euclidean algorithm.
  friend Poly gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
      Poly r = divmod(a, b).second;
      a = b;
      b = r;
    }
    return a.monic();
  }

  // Coefficients reversed against a declared degree bound m >= deg:
  // rev(P, m)(w) = w^m * P(1/w). Used for the chart flip z = 1/w.
  Poly reversed(int m) const {
    std::vector<F> s(m + 1, F(0));
    for (int k = 0; k <= degree(); ++k) s[m - k] = c_[k];
    return Poly(std::move(s));
  }

 private:
  void strip() {
    while (!c_.empty() && c_.back() == F(0)) c_.pop_back();
  }
  std::vector<F> c_;
};

// Product of (z - r) over the given roots.
template <class F>
Poly<F> poly_from_roots(const std::vector<F>& roots) {
  Poly<F> p = Poly<F>::constant(F(1));
  for (const F& r : roots) p = p * Poly<F>{F(0) - r, F(1)};
  return p;
}

}  // namespace garnier
