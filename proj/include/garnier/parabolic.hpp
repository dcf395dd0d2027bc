#pragma once

/*
 * Parabolic bundles on the projective line and their stability theory.
 *
 * A quasi-parabolic bundle is a splitting type O(e1) + O(e2) together with
 * a direction l_i in the 2-dimensional fiber over each pole t_i. Stability
 * depends on a weight vector w in [0,1]^n through the index
 *
 *     Stab(L) = d - 2 deg L + sum_{i not in I} w_i - sum_{i in I} w_i,
 *
 * where I is the set of poles whose parabolic lies on the line subbundle L.
 * Everything here is decided exactly: line subbundles of a fixed degree
 * through a fixed set of parabolics form the kernel of an explicit
 * interpolation system, so existence is a rank computation.
 *
 * Index subsets are 0-based internally; the JSON layer converts to the
 * 1-based labels used in serialized data.
 */

#include "garnier/projpoint.hpp"
#include "garnier/rational.hpp"

#include <optional>
#include <vector>

namespace garnier {

// A point of P^1 over Q: either a finite value or the point at infinity.
struct P1Point {
  bool inf = false;
  Rat v = 0;

  static P1Point finite(const Rat& x) { return P1Point{false, x}; }
  static P1Point infinity() { return P1Point{true, 0}; }
  friend bool operator==(const P1Point& a, const P1Point& b) {
    return a.inf == b.inf && (a.inf || a.v == b.v);
  }
  std::string to_string() const { return inf ? "inf" : rat_to_string(v); }
};

// Fractional linear transformation z -> (az+b)/(cz+d).
struct Mobius {
  Rat a = 1, b = 0, c = 0, d = 1;
  P1Point apply(const P1Point& p) const;
  // The unique map sending (p,q,r) to (0,1,inf).
  static Mobius to_standard(const P1Point& p, const P1Point& q, const P1Point& r);
};

// Pole configuration. The normalized form used by all charts keeps the
// custom points t_1..t_{n-3} finite and pins the last three to 0, 1, inf.
class PointConfig {
 public:
  // Normalized configuration from the n-3 custom points (distinct, not 0 or 1).
  explicit PointConfig(std::vector<Rat> custom);
  // Arbitrary distinct poles; used by combinatorial routines that do not
  // need the normalized chart.
  static PointConfig from_poles(std::vector<P1Point> poles);
  // Moves the last three of the given poles to 0, 1, inf and returns the
  // normalized configuration together with the map used.
  static std::pair<PointConfig, Mobius> normalized(const std::vector<P1Point>& poles);

  int n() const { return static_cast<int>(poles_.size()); }
  const std::vector<P1Point>& poles() const { return poles_; }
  bool is_normalized() const { return normalized_; }
  // Custom finite points t_1..t_{n-3} of a normalized configuration.
  std::vector<Rat> custom() const;

 private:
  PointConfig() = default;
  std::vector<P1Point> poles_;
  bool normalized_ = false;
};

// Local exponents nu_i^+/- and the bundle degree, tied by the Fuchs
// relation d + sum(nu_i^+ + nu_i^-) = 0.
class SpectralData {
 public:
  SpectralData(std::vector<Rat> nu_plus, std::vector<Rat> nu_minus, int d);
  int n() const { return static_cast<int>(plus_.size()); }
  int degree() const { return d_; }
  const Rat& nu_plus(int i) const { return plus_[i]; }
  const Rat& nu_minus(int i) const { return minus_[i]; }
  Rat rho() const;                                     // sum of the nu_i^-
  Rat kappa(int i) const { return plus_[i] - minus_[i]; }

 private:
  std::vector<Rat> plus_, minus_;
  int d_;
};

struct Weights {
  std::vector<Rat> w;
  explicit Weights(std::vector<Rat> values);
  int n() const { return static_cast<int>(w.size()); }
};

struct ParabolicBundle {
  int e1, e2;                  // splitting degrees, e1 >= e2
  std::vector<ProjPoint> l;    // parabolic directions, one per pole
  ParabolicBundle(int e1_, int e2_, std::vector<ProjPoint> dirs);
  int degree() const { return e1 + e2; }
  int n() const { return static_cast<int>(l.size()); }
};

// Weight-space hyperplane d - 2k - sum_{I1} w_i + sum_{I2} w_i = 0.
struct Wall {
  int d, k;
  std::vector<int> I1;  // sorted
  friend bool operator==(const Wall& a, const Wall& b) {
    return a.d == b.d && a.k == b.k && a.I1 == b.I1;
  }
  friend bool operator<(const Wall& a, const Wall& b) {
    if (a.k != b.k) return a.k < b.k;
    return a.I1 < b.I1;
  }
  // Left-hand side of the wall equation at w.
  Rat eval(const Weights& w) const;
};

struct ChamberSample {
  std::vector<int> signs;  // +1/-1 pattern against the splitting walls
  Weights rep;             // exact interior sample point
};

struct ChamberReport {
  int chamber_count = 0;
  std::vector<ChamberSample> chambers;
};

struct SubbundleWitness {
  bool exists = false;
  // Map O(k) -> O(e1) + O(e2) as a polynomial pair, when found.
  std::vector<Rat> f, g;  // coefficient lists
};

Rat stability_index(const ParabolicBundle& bundle, const Weights& w, int k,
                    const std::vector<int>& I);

SubbundleWitness subbundle_exists(const ParabolicBundle& bundle, const PointConfig& config,
                                  int k, const std::vector<int>& I);

bool is_stable(const ParabolicBundle& bundle, const PointConfig& config, const Weights& w);
bool is_semistable(const ParabolicBundle& bundle, const PointConfig& config, const Weights& w);

bool is_undecomposable(const ParabolicBundle& bundle, const PointConfig& config);

std::optional<Weights> exists_stabilizing_weight(const ParabolicBundle& bundle,
                                                 const PointConfig& config);

bool genericity_check(const SpectralData& sd);

std::vector<Wall> wall_list(int n, int d);

ChamberReport chamber_census_n4();

// Nonemptiness of the n=4, d=0 moduli region: 0 <= w_i+w_j+w_k-w_l <= 2.
bool n4_moduli_nonempty(const Weights& w);

bool is_admissible(const Weights& w, int d);

bool main_chart_membership(const ParabolicBundle& bundle, const PointConfig& config);

ParabolicBundle wall_crossing_family(const Rat& eps, const std::vector<int>& I1, int n,
                                     const std::vector<Rat>& u, const std::vector<Rat>& v);

}  // namespace garnier
