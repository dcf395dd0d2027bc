// Degree-4 Del Pezzo geometry attached to the five-pole moduli space:
// the sixteen special curves in the b-plane, their incidence on the
// blow-up chart, their lifts inside the incidence variety, the closed
// forms specific to n = 5, the quadratic maps induced by pairs of
// elementary transformations, the chart atlas, and the one-parameter
// degeneration onto the special lines.
#pragma once

#include "garnier/maps.hpp"
#include "garnier/parabolic.hpp"
#include "garnier/poly.hpp"
#include "garnier/projpoint.hpp"
#include "garnier/rational.hpp"
#include "garnier/transforms.hpp"

#include <array>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

namespace garnier {

// ---------------------------------------------------------------------------
// The sixteen-curve catalog in the b-plane.
// ---------------------------------------------------------------------------

enum class CurveTag { Conic, Exceptional, Line };

struct SpecialCurve {
  CurveTag tag;
  int i = 0, j = 0;            // 1-based pole indices (Exceptional: i; Line: i<j)
  std::vector<Rat> equation;   // line: 3 coefficients; conic: b1^2 - b0 b2 marker
  std::string name() const;
};

struct CurveCatalog {
  std::vector<P1Point> z;           // the five base-curve parameter values
  std::vector<SpecialCurve> curves; // [0] conic, [1..5] exceptional, [6..15] lines
  std::vector<ProjPoint> D;         // D_i on the conic, 0-based storage
  static int line_index(int i, int j);  // catalog index for 1 <= i < j <= 5
};

// Image of a base-curve point under z -> (1 : z : z^2).
ProjPoint conic_point(const P1Point& z);

CurveCatalog sixteen_curves(const PointConfig& config);

// Adjacency lists of the sixteen (-1)-curves on the blow-up chart;
// throws on non-generic pole configurations.
std::vector<std::vector<int>> delpezzo_incidence(const CurveCatalog& cat);

// ---------------------------------------------------------------------------
// Special points in the a-plane.
// ---------------------------------------------------------------------------

// Tangent line to the double-root conic at the pole z_i, as a linear form
// on (a0, a1, a2).
std::vector<Rat> delta_line(const P1Point& z);

// Double-root locus point (z^2 : -2z : 1) in (a0 : a1 : a2) order.
ProjPoint double_root_point(const P1Point& z);

// Intersection of the tangent lines at z_i and z_j.
ProjPoint tangent_crossing(const P1Point& zi, const P1Point& zj);

// ---------------------------------------------------------------------------
// Lifts inside the incidence variety.
// ---------------------------------------------------------------------------

// A rational curve in P^2_a x P^2_b given by a polynomial parameterization
// together with defining equations (evaluated on polynomial arguments so
// the same code checks numeric points and whole parameterizations).
struct LiftedCurve {
  std::string name;
  CurveTag tag;
  int i = 0, j = 0;
  std::vector<Poly<Rat>> a, b;  // affine parameterization, degree <= h
  int h = 0;                    // homogenization degree of the parameter
  using EqFn = std::function<Poly<Rat>(const std::vector<Poly<Rat>>&,
                                       const std::vector<Poly<Rat>>&)>;
  std::vector<EqFn> eqs;

  std::pair<std::vector<Rat>, std::vector<Rat>> at(const P1Point& s) const;
};

std::vector<LiftedCurve> sigma_lift(const PointConfig& config);

bool on_lifted_curve(const LiftedCurve& c, const std::vector<Rat>& a,
                     const std::vector<Rat>& b);

// Parameter value mapping to the given point, if any.
std::optional<P1Point> lifted_parameter(const LiftedCurve& c, const std::vector<Rat>& a,
                                        const std::vector<Rat>& b);

// All common points of two distinct lifted curves.
std::vector<std::pair<std::vector<Rat>, std::vector<Rat>>> intersect_lifted(
    const LiftedCurve& x, const LiftedCurve& y);

// Tangent directions at a common point are independent inside the tangent
// space of the product; throws if the point is not on both curves or the
// curves coincide.
bool transversality_check(const LiftedCurve& x, const LiftedCurve& y,
                          const std::vector<Rat>& a, const std::vector<Rat>& b);

// ---------------------------------------------------------------------------
// Closed forms specific to five poles (t1, t2, 0, 1, infinity).
// ---------------------------------------------------------------------------

template <class F>
std::vector<F> bun5_closed(const F& t1, const F& t2, const F& u1, const F& u2) {
  F b2 = t1 * t2 * (t1 * (t2 - F(1)) * u1 - (t1 - F(1)) * t2 * u2 + (t1 - t2));
  F b1 = t1 * t2 * ((t2 - F(1)) * u1 - (t1 - F(1)) * u2 + (t1 - t2));
  F b0 = t2 * (t2 - F(1)) * u1 - t1 * (t1 - F(1)) * u2 + t1 * t2 * (t1 - t2);
  return {b0, b1, b2};
}

template <class F>
std::vector<F> bun5_inverse_closed(const F& t1, const F& t2, const std::vector<F>& b) {
  F den = b[2] - (t1 + t2) * b[1] + t1 * t2 * b[0];
  if (den == F(0)) throw std::domain_error("bundle outside the affine chart");
  F u1 = t1 * (b[2] - (t2 + F(1)) * b[1] + t2 * b[0]) / den;
  F u2 = t2 * (b[2] - (t1 + F(1)) * b[1] + t1 * b[0]) / den;
  return {u1, u2};
}

template <class F>
std::vector<F> c5_closed(const F& t1, const F& t2, const F& rho, const std::vector<F>& b,
                         const F& q1, const F& q2) {
  F num = b[2] - (t1 + t2) * b[1] + t1 * t2 * b[0];
  F den = b[2] - (q1 + q2) * b[1] + q1 * q2 * b[0];
  if (den == F(0)) throw std::domain_error("apparent divisor on the degenerate locus");
  F c1 = rho * (q1 - t1) * (q2 - t1) / (t1 * (t1 - F(1)) * (t1 - t2)) * num / den;
  F c2 = rho * (q1 - t2) * (q2 - t2) / (t2 * (t2 - F(1)) * (t2 - t1)) * num / den;
  return {c1, c2};
}

template <class F>
std::vector<F> c5_closed_ab(const F& t1, const F& t2, const F& rho,
                            const std::vector<F>& a, const std::vector<F>& b) {
  F num = b[2] - (t1 + t2) * b[1] + t1 * t2 * b[0];
  F den = a[2] * b[2] + a[1] * b[1] + a[0] * b[0];
  if (den == F(0)) throw std::domain_error("pair on the incidence variety");
  F c1 = rho * (a[2] * t1 * t1 + a[1] * t1 + a[0]) / (t1 * (t1 - F(1)) * (t1 - t2)) * num / den;
  F c2 = rho * (a[2] * t2 * t2 + a[1] * t2 + a[0]) / (t2 * (t2 - F(1)) * (t2 - t1)) * num / den;
  return {c1, c2};
}

template <class F>
std::vector<F> p5_closed(const F& rho, const std::vector<F>& b, const F& q1, const F& q2) {
  F den = b[2] - (q1 + q2) * b[1] + q1 * q2 * b[0];
  if (den == F(0)) throw std::domain_error("apparent divisor on the degenerate locus");
  return {rho * (b[1] - q2 * b[0]) / den, rho * (b[1] - q1 * b[0]) / den};
}

template <class F>
std::vector<F> b5_from_pq(const F& rho, const F& p1, const F& p2, const F& q1, const F& q2) {
  return {p1 - p2, p1 * q1 - p2 * q2, p1 * q1 * q1 - p2 * q2 * q2 + rho * (q1 - q2)};
}

// ---------------------------------------------------------------------------
// Bundle representatives and classification of the special families.
// ---------------------------------------------------------------------------

// Generic chart bundle: O + O(-1) with directions (u_i : 1), (0:1), (1:1)
// and (0:1) in the leading frame at infinity.
ParabolicBundle chart_bundle(const std::vector<Rat>& u);

// Chart coordinates of a degree -1 presentation, normalizing by a bundle
// automorphism; throws when the bundle sits outside the chart.
std::vector<Rat> u_from_bundle(const ParabolicBundle& b, const PointConfig& config);

// Does a line subbundle of the given degree pass through the selected
// parabolics?  Optionally returns the section coefficients (s | c).
bool common_subbundle(const ParabolicBundle& b, const PointConfig& config,
                      const std::vector<int>& idx, int sub_deg,
                      std::vector<Rat>* section = nullptr);

// Family representatives (degree -1 bundles).
ParabolicBundle conic_family_bundle(const PointConfig& config, const Rat& z0);
ParabolicBundle exceptional_family_bundle(const PointConfig& config, int i,
                                          std::mt19937_64& rng);
ParabolicBundle line_family_bundle(const PointConfig& config, int i, int j, const Rat& z0,
                                   std::mt19937_64& rng);

// Point representatives.
ParabolicBundle point_bundle_Di(const PointConfig& config, int i);
ParabolicBundle point_bundle_Dij(const PointConfig& config, int i, int j);
ParabolicBundle point_bundle_D(const PointConfig& config);

// Catalog index of the special family containing the bundle, or -1 for a
// generic bundle.
int classify_special_bundle(const ParabolicBundle& b, const PointConfig& config);

// ---------------------------------------------------------------------------
// Pairs of elementary transformations.
// ---------------------------------------------------------------------------

struct PairAction {
  int i = 0, j = 0;                     // 1-based pole indices, i != j
  std::vector<std::vector<Rat>> quad;   // 3 x 6 matrix on (b0^2, b0b1, b0b2, b1^2, b1b2, b2^2)
  std::vector<int> perm;                // images of the 16 catalog curves
};

std::vector<Rat> apply_quadratic_map(const std::vector<std::vector<Rat>>& quad,
                                     const std::vector<Rat>& b);

// Transport bundles through Elm^-_{t_i} o Elm^+_{t_j}, fit the induced
// quadratic self-map of the b-plane and the permutation of the catalog.
PairAction elm_pair_action(int i, int j, const PointConfig& config, uint64_t seed);

struct GroupReport {
  int order = 0;
  bool transitive = false;
  std::vector<std::vector<int>> elements;  // permutations of the 16 curves
};

GroupReport elm_pair_group(const PointConfig& config, uint64_t seed);

// ---------------------------------------------------------------------------
// Chart atlas.
// ---------------------------------------------------------------------------

struct ChartAtlas {
  std::vector<std::string> chart_names;             // V, V^, V_1..V_5
  std::vector<Weights> chart_weights;
  std::vector<std::string> entry_names;             // D, D_i, D_ij, Pi, Pi_i, Pi_ij
  std::vector<std::vector<bool>> member;            // entry x chart
  bool membership(const std::string& entry, const std::string& chart) const;
};

ChartAtlas chart_membership_table(const PointConfig& config, uint64_t seed);

// ---------------------------------------------------------------------------
// Degeneration onto the special line over the rational function field.
// ---------------------------------------------------------------------------

struct DegenerationResult {
  std::vector<Rat> a_limit;    // (a0, a1, a2)
  std::vector<Rat> b_limit;    // (b0, b1, b2)
  Rat q2;                      // surviving apparent root
  std::vector<Rat> uvw_limit;  // blow-up coordinates
  bool a_matches = false;
  bool b_is_D1 = false;
  bool q1_limit_is_t1 = false;
  bool uvw_matches = false;
  bool surface_holds = false;
  bool ok() const {
    return a_matches && b_is_D1 && q1_limit_is_t1 && uvw_matches && surface_holds;
  }
};

DegenerationResult degeneration_limit(const Rat& t1, const Rat& t2, const Rat& rho,
                                      const Rat& kappa, const Rat& c1, const Rat& c2,
                                      const Rat& u2);

}  // namespace garnier
