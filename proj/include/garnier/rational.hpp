#pragma once

/*
 * Exact scalar arithmetic.
 *
 * Every computation in this library is carried out over an exact field:
 * either the rationals Q (the default, `Rat`) or the rational-function
 * field Q(t) used for one-parameter limits (see ratfun.hpp, `QT`).
 * Code that works for any such field is templated on the scalar type F,
 * which must be constructible from `int`, support + - * / == and have
 * decidable equality. No floating point appears anywhere.
 */

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace garnier {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline bool is_integer(const Rat& r) { return denominator(r) == 1; }

// Parses "p/q" or "p" (optionally signed). Rejects q = 0 and junk.
inline Rat rat_from_string(const std::string& s) {
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rat(Int(s));
    Int p(s.substr(0, slash));
    Int q(s.substr(slash + 1));
    if (q == 0) throw std::invalid_argument("zero denominator");
    return Rat(p, q);
  } catch (const std::runtime_error&) {
    throw std::invalid_argument("bad rational literal: " + s);
  }
}

// Formats as "p/q", or just "p" when the denominator is 1.
inline std::string rat_to_string(const Rat& r) {
  std::string s = numerator(r).str();
  if (!is_integer(r)) s += "/" + denominator(r).str();
  return s;
}

}  // namespace garnier
