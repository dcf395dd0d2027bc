#pragma once

/*
 * First-order jets for exact partial derivatives: a value together with
 * its gradient with respect to k active coordinates. The arithmetic
 * encodes the product and quotient rules, so pushing a rational
 * expression through Jet arithmetic yields exact partials, which is all
 * the 2-form checks need (second derivatives cancel in d of a 1-form
 * with exact coefficients, so first order suffices).
 */

#include <stdexcept>
#include <vector>

namespace garnier {

template <class F>
struct Jet {
  F val;
  std::vector<F> d;  // partials with respect to the active coordinates

  Jet() : val(0) {}
  Jet(int v) : val(v) {}
  Jet(const F& v) : val(v) {}
  Jet(F v, std::vector<F> grad) : val(std::move(v)), d(std::move(grad)) {}

  // The i-th of k active coordinates, seeded with gradient e_i.
  static Jet variable(const F& v, int i, int k) {
    std::vector<F> g(k, F(0));
    g[i] = F(1);
    return Jet(v, std::move(g));
  }
  static Jet constant(const F& v, int k) { return Jet(v, std::vector<F>(k, F(0))); }

  F partial(int i) const { return i < static_cast<int>(d.size()) ? d[i] : F(0); }

  friend Jet operator+(const Jet& a, const Jet& b) {
    Jet r(a.val + b.val, merged(a, b));
    for (size_t i = 0; i < r.d.size(); ++i) r.d[i] = a.partial(i) + b.partial(i);
    return r;
  }
  friend Jet operator-(const Jet& a, const Jet& b) {
    Jet r(a.val - b.val, merged(a, b));
    for (size_t i = 0; i < r.d.size(); ++i) r.d[i] = a.partial(i) - b.partial(i);
    return r;
  }
  Jet operator-() const { return Jet(0) - *this; }
  friend Jet operator*(const Jet& a, const Jet& b) {
    Jet r(a.val * b.val, merged(a, b));
    for (size_t i = 0; i < r.d.size(); ++i)
      r.d[i] = a.partial(i) * b.val + a.val * b.partial(i);
    return r;
  }
  friend Jet operator/(const Jet& a, const Jet& b) {
    if (b.val == F(0)) throw std::domain_error("jet division by zero value");
    Jet r(a.val / b.val, merged(a, b));
    for (size_t i = 0; i < r.d.size(); ++i)
      r.d[i] = (a.partial(i) * b.val - a.val * b.partial(i)) / (b.val * b.val);
    return r;
  }
  friend bool operator==(const Jet& a, const Jet& b) {
    if (a.val != b.val) return false;
    size_t k = std::max(a.d.size(), b.d.size());
    for (size_t i = 0; i < k; ++i)
      if (a.partial(i) != b.partial(i)) return false;
    return true;
  }

 private:
  static std::vector<F> merged(const Jet& a, const Jet& b) {
    return std::vector<F>(std::max(a.d.size(), b.d.size()), F(0));
  }
};

}  // namespace garnier
