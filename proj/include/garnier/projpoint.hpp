#pragma once

/*
 * Projective points with a canonical normal form over Q: denominators
 * cleared, integer content divided out, first nonzero coordinate positive.
 * Equality of points is equality of normal forms, which makes every
 * projective identity in the test suites a literal comparison.
 *
 * Over a general field (Q(t) limits) there is no sign convention, so the
 * generic helpers below normalize by scaling the first nonzero coordinate
 * to 1 instead.
 */

#include "garnier/rational.hpp"

#include <vector>

namespace garnier {

class ProjPoint {
 public:
  explicit ProjPoint(std::vector<Rat> x) : x_(std::move(x)) {
    bool all_zero = true;
    for (const Rat& v : x_)
      if (v != 0) all_zero = false;
    if (x_.empty() || all_zero) throw std::invalid_argument("projective point needs a nonzero coordinate");
    normalize();
  }

  int dim() const { return static_cast<int>(x_.size()) - 1; }
  const std::vector<Rat>& coords() const { return x_; }
  const Rat& operator[](int i) const { return x_[i]; }

  friend bool operator==(const ProjPoint& a, const ProjPoint& b) { return a.x_ == b.x_; }
  friend bool operator!=(const ProjPoint& a, const ProjPoint& b) { return !(a == b); }
  friend bool operator<(const ProjPoint& a, const ProjPoint& b) { return a.x_ < b.x_; }

  std::string to_string() const {
    std::string s = "(";
    for (size_t i = 0; i < x_.size(); ++i) {
      if (i) s += ":";
      s += rat_to_string(x_[i]);
    }
    return s + ")";
  }

 private:
  void normalize() {
    Int l = 1;
    for (const Rat& v : x_) l = lcm(l, denominator(v));
    Int g = 0;
    std::vector<Int> ints;
    ints.reserve(x_.size());
    for (const Rat& v : x_) {
      Int w = numerator(v) * (l / denominator(v));
      ints.push_back(w);
      g = gcd(g, w);
    }
    if (g < 0) g = -g;
    for (const Int& w : ints)
      if (w != 0) {
        if (w < 0) g = -g;
        break;
      }
    for (size_t i = 0; i < x_.size(); ++i) x_[i] = Rat(ints[i]) / Rat(g);
  }
  std::vector<Rat> x_;
};

// Scales the first nonzero coordinate to 1. Works over any exact field.
template <class F>
std::vector<F> proj_normalize(std::vector<F> x) {
  for (const F& v : x)
    if (!(v == F(0))) {
      F inv = F(1) / v;
      for (F& w : x) w = w * inv;
      return x;
    }
  throw std::invalid_argument("projective normalization of the zero vector");
}

template <class F>
bool proj_equal(const std::vector<F>& a, const std::vector<F>& b) {
  if (a.size() != b.size()) return false;
  return proj_normalize(a) == proj_normalize(b);
}

}  // namespace garnier
