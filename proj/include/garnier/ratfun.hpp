#pragma once

/*
 * Rational functions num/den over an exact field F, kept in normal form:
 * gcd(num, den) = 1 and den monic. Equality of normal forms is therefore
 * literal equality.
 *
 * RatFun<Rat> plays two roles. As a function of the curve coordinate z it
 * holds connection-matrix entries; as a scalar it is the field Q(t) of the
 * one-parameter degeneration (alias QT below). The two never mix in one
 * expression: Q(t)-valued matrices are RatFun<QT>.
 */

#include "garnier/poly.hpp"

#include <optional>
#include <stdexcept>

namespace garnier {

template <class F>
class RatFun {
 public:
  RatFun() : num_(), den_(Poly<F>::constant(F(1))) {}
  RatFun(int v) : RatFun(Poly<F>::constant(F(v)), Poly<F>::constant(F(1))) {}
  RatFun(const F& v) : num_(Poly<F>::constant(v)), den_(Poly<F>::constant(F(1))) {}
  RatFun(Poly<F> num, Poly<F> den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("rational function with zero denominator");
    normalize();
  }
  static RatFun from_poly(Poly<F> p) { return RatFun(std::move(p), Poly<F>::constant(F(1))); }
  // The coordinate itself (z, or t for the scalar field Q(t)).
  static RatFun variable() { return from_poly(Poly<F>{F(0), F(1)}); }

  const Poly<F>& num() const { return num_; }
  const Poly<F>& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_poly() const { return den_.degree() == 0; }

  friend RatFun operator+(const RatFun& a, const RatFun& b) {
    return RatFun(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RatFun operator-(const RatFun& a, const RatFun& b) {
    return RatFun(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
  }
  RatFun operator-() const { return RatFun(-num_, den_); }
  friend RatFun operator*(const RatFun& a, const RatFun& b) {
    return RatFun(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend RatFun operator/(const RatFun& a, const RatFun& b) {
    if (b.is_zero()) throw std::domain_error("division by zero rational function");
    return RatFun(a.num_ * b.den_, a.den_ * b.num_);
  }
  friend bool operator==(const RatFun& a, const RatFun& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const RatFun& a, const RatFun& b) { return !(a == b); }

  // Order of vanishing at x: multiplicity in num minus multiplicity in den.
  // Positive = zero, negative = pole. Throws on the zero function.
  int order_at(const F& x) const {
    if (is_zero()) throw std::domain_error("order of the zero function");
    return root_mult(num_, x) - root_mult(den_, x);
  }

  // Value at a non-pole.
  F eval(const F& x) const {
    F d = den_.template eval<F>(x);
    if (d == F(0)) throw std::domain_error("evaluation at a pole");
    return num_.template eval<F>(x) / d;
  }

  // Value after cancellation; the normal form already cancelled, so a zero
  // denominator here is a genuine pole.
  F limit_at(const F& x) const { return eval(x); }
  std::optional<F> try_limit_at(const F& x) const {
    if (den_.template eval<F>(x) == F(0)) return std::nullopt;
    return eval(x);
  }

  // Residue at a simple pole t: ((z-t) * f)(t). Throws on higher-order poles;
  // returns 0 if there is no pole at all.
  F residue_at(const F& t) const {
    if (is_zero()) return F(0);
    int ord = order_at(t);
    if (ord >= 0) return F(0);
    if (ord < -1) throw std::domain_error("residue at a higher-order pole");
    Poly<F> shifted = divmod(den_, Poly<F>{F(0) - t, F(1)}).first;
    return num_.template eval<F>(t) / shifted.template eval<F>(t);
  }

  RatFun derivative() const {
    return RatFun(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
  }

  // Substitution z -> 1/w via coefficient reversal against a common degree.
  RatFun flip() const {
    int m = std::max(num_.degree(), den_.degree());
    return RatFun(num_.reversed(m), den_.reversed(m));
  }

  std::string to_string(const std::string& var) const {
    auto poly_str = [&](const Poly<F>& p) {
      if (p.is_zero()) return std::string("0");
      std::string s;
      for (int k = p.degree(); k >= 0; --k) {
        if (p.coeff(k) == F(0)) continue;
        if (!s.empty()) s += " + ";
        s += scalar_str(p.coeff(k));
        if (k > 0) s += "*" + var + (k > 1 ? "^" + std::to_string(k) : "");
      }
      return s;
    };
    if (is_poly()) return poly_str(num_);
    return "(" + poly_str(num_) + ")/(" + poly_str(den_) + ")";
  }

 private:
  static int root_mult(Poly<F> p, const F& x) {
    Poly<F> lin{F(0) - x, F(1)};
    int m = 0;
    while (true) {
      auto [q, r] = divmod(p, lin);
      if (!r.is_zero()) return m;
      ++m;
      p = q;
    }
  }
  static std::string scalar_str(const F& v) {
    if constexpr (std::is_same_v<F, Rat>) return rat_to_string(v);
    else return v.to_string("t");
  }
  void normalize() {
    Poly<F> g = gcd(num_, den_);
    if (g.degree() > 0) {
      num_ = divmod(num_, g).first;
      den_ = divmod(den_, g).first;
    }
    F lead = den_.leading();
    if (lead != F(1)) {
      num_ = (F(1) / lead) * num_;
      den_ = den_.monic();
    }
  }
  Poly<F> num_, den_;
};

// The scalar field Q(t) of the degeneration parameter.
using QT = RatFun<Rat>;

// Embeds a rational constant into Q(t).
inline QT qt_const(const Rat& r) { return QT(r); }

}  // namespace garnier
