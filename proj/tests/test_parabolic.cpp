#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "garnier/parabolic.hpp"
#include "garnier/poly.hpp"

#include <random>

using namespace garnier;

namespace {

PointConfig n5_config() { return PointConfig({Rat(2), Rat(3)}); }

// Bundle in the main chart of degree -1: parabolics v_i e1 + e2 with the
// chart values (v_1, v_2, 0, 1, 0) over (t_1, t_2, 0, 1, inf).
ParabolicBundle chart_bundle_n5(const Rat& u1, const Rat& u2) {
  std::vector<ProjPoint> dirs{ProjPoint({u1, 1}), ProjPoint({u2, 1}), ProjPoint({0, 1}),
                              ProjPoint({1, 1}), ProjPoint({0, 1})};
  return ParabolicBundle(0, -1, dirs);
}

struct RatGen {
  std::mt19937_64 rng;
  explicit RatGen(uint64_t seed) : rng(seed) {}
  Rat operator()(int lim = 12) {
    std::uniform_int_distribution<int> num(-lim, lim);
    std::uniform_int_distribution<int> den(1, lim);
    return Rat(num(rng), den(rng));
  }
};

}  // namespace

TEST_CASE("point configuration normalization") {
  PointConfig cfg = n5_config();
  CHECK(cfg.n() == 5);
  CHECK(cfg.is_normalized());
  CHECK(cfg.poles()[4].inf);
  CHECK_THROWS(PointConfig({Rat(2), Rat(2)}));
  CHECK_THROWS(PointConfig({Rat(1)}));

  // Moving an arbitrary quadruple to normal form.
  auto [norm, map] = PointConfig::normalized(
      {P1Point::finite(5), P1Point::finite(-1), P1Point::finite(0), P1Point::infinity()});
  CHECK(norm.is_normalized());
  CHECK(map.apply(P1Point::finite(-1)) == P1Point::finite(0));
  CHECK(map.apply(P1Point::finite(0)) == P1Point::finite(1));
  CHECK(map.apply(P1Point::infinity()).inf);
  CHECK(norm.custom()[0] == map.apply(P1Point::finite(5)).v);
}

TEST_CASE("spectral data accessors and Fuchs guard") {
  // d = -1 data: total exponent sum must be 1.
  SpectralData sd({Rat(1, 4), Rat(1, 4), Rat(1, 4), Rat(1, 4), Rat(1, 4)},
                  {Rat(-1, 8), Rat(-1, 8), Rat(1, 8), Rat(1, 8), Rat(-1, 4)}, -1);
  CHECK(sd.rho() == Rat(-1, 4));
  CHECK(sd.kappa(0) == Rat(3, 8));
  CHECK_THROWS(SpectralData({Rat(1)}, {Rat(1)}, 0));
}

TEST_CASE("stability index worked values") {
  Weights w14(std::vector<Rat>(5, Rat(1, 4)));
  Weights w25(std::vector<Rat>(5, Rat(2, 5)));
  ParabolicBundle b = chart_bundle_n5(2, 5);
  CHECK(stability_index(b, w14, -1, {0, 1, 2, 3}) == Rat(1, 4));
  CHECK(stability_index(b, w25, -1, {0, 1, 2, 3}) == Rat(-1, 5));
  ParabolicBundle triv(0, 0, std::vector<ProjPoint>(5, ProjPoint({1, 1})));
  Weights zero(std::vector<Rat>(5, Rat(0)));
  CHECK(stability_index(triv, zero, 0, {}) == 0);
}

TEST_CASE("subbundle existence by interpolation") {
  PointConfig cfg = n5_config();
  ParabolicBundle triv(0, 0,
                       {ProjPoint({2, 1}), ProjPoint({3, 1}), ProjPoint({0, 1}),
                        ProjPoint({1, 1}), ProjPoint({1, 0})});
  for (int i = 0; i < 5; ++i) CHECK(subbundle_exists(triv, cfg, 0, {i}).exists);

  ParabolicBundle chart = chart_bundle_n5(Rat(2), Rat(5));
  CHECK(subbundle_exists(chart, cfg, 0, {}).exists);             // the O factor
  CHECK(!subbundle_exists(chart, cfg, -1, {0, 1, 2, 3, 4}).exists);  // 5 conditions, 3 unknowns
  CHECK(subbundle_exists(chart, cfg, -1, {0, 1}).exists);  // 2 conditions, 3 unknowns
}

TEST_CASE("subbundle witness really is saturated") {
  PointConfig cfg = n5_config();
  ParabolicBundle chart = chart_bundle_n5(Rat(7, 3), Rat(-2));
  auto wit = subbundle_exists(chart, cfg, -1, {0, 1});
  REQUIRE(wit.exists);
  Poly<Rat> f(wit.f), g(wit.g);
  CHECK((f.is_zero() || g.is_zero() || gcd(f, g).degree() == 0));
  // Fiber proportionality at the requested poles.
  for (int i : {0, 1}) {
    Rat t = cfg.poles()[i].v;
    CHECK(f.eval<Rat>(t) * chart.l[i][1] == g.eval<Rat>(t) * chart.l[i][0]);
  }
}

TEST_CASE("stability in the democratic chambers") {
  PointConfig cfg = n5_config();
  Weights w14(std::vector<Rat>(5, Rat(1, 4)));
  Weights w25(std::vector<Rat>(5, Rat(2, 5)));

  ParabolicBundle good = chart_bundle_n5(2, 5);
  CHECK(is_stable(good, cfg, w14));
  CHECK(is_semistable(good, cfg, w14));

  // Four parabolics on a common O(-1): the D_5-type point. Directions
  // (f(t):c) for f = z-4, c = 1 put poles 1..4 on one interpolant.
  auto on_line = [](const Rat& t) { return ProjPoint({t - 4, 1}); };
  // At infinity the line's fiber in the leading frame is (1:1); pick l
  // off both the line and the O factor.
  ParabolicBundle dtype(0, -1,
                        {on_line(2), on_line(3), on_line(0), on_line(1), ProjPoint({5, 1})});
  CHECK(is_stable(dtype, cfg, w14));
  CHECK(!is_stable(dtype, cfg, w25));

  // Decomposable: all parabolics on two constant lines of a trivial bundle.
  ParabolicBundle dec(0, 0,
                      {ProjPoint({1, 0}), ProjPoint({1, 0}), ProjPoint({0, 1}),
                       ProjPoint({0, 1}), ProjPoint({0, 1})});
  Weights half(std::vector<Rat>(5, Rat(1, 2)));
  CHECK(!is_stable(dec, cfg, half));
}

TEST_CASE("undecomposability") {
  PointConfig cfg4(std::vector<Rat>{Rat(2)});
  // n=4 trivial splitting with parabolics 0, 1, inf, u distinct.
  ParabolicBundle generic(0, 0,
                          {ProjPoint({5, 1}), ProjPoint({0, 1}), ProjPoint({1, 1}),
                           ProjPoint({1, 0})});
  CHECK(is_undecomposable(generic, cfg4));

  PointConfig cfg2 = PointConfig::from_poles({P1Point::finite(0), P1Point::finite(1)});
  ParabolicBundle two(0, 0, {ProjPoint({0, 1}), ProjPoint({1, 0})});
  CHECK(!is_undecomposable(two, cfg2));

  // Splitting gap n-1 is always decomposable: interpolation always solves.
  PointConfig cfg5 = n5_config();
  RatGen gen(31);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<ProjPoint> dirs;
    for (int i = 0; i < 5; ++i) dirs.push_back(ProjPoint({gen(), 1}));
    ParabolicBundle wide(2, -2, dirs);
    CHECK(!is_undecomposable(wide, cfg5));
  }
}

TEST_CASE("stabilizing weights") {
  PointConfig cfg4(std::vector<Rat>{Rat(2)});
  ParabolicBundle generic(0, 0,
                          {ProjPoint({5, 1}), ProjPoint({0, 1}), ProjPoint({1, 1}),
                           ProjPoint({1, 0})});
  auto w = exists_stabilizing_weight(generic, cfg4);
  REQUIRE(w.has_value());
  CHECK(w->w == std::vector<Rat>{Rat(1, 2), Rat(1, 2), Rat(1, 2), Rat(0)});
  CHECK(is_stable(generic, cfg4, *w));

  ParabolicBundle dec(0, 0,
                      {ProjPoint({1, 0}), ProjPoint({1, 0}), ProjPoint({0, 1}),
                       ProjPoint({0, 1})});
  CHECK(!exists_stabilizing_weight(dec, cfg4).has_value());

  // D_5-type bundle of odd degree gets the democratic representative.
  PointConfig cfg5 = n5_config();
  auto on_line = [](const Rat& t) { return ProjPoint({t - 4, 1}); };
  ParabolicBundle dtype(0, -1,
                        {on_line(2), on_line(3), on_line(0), on_line(1), ProjPoint({5, 1})});
  auto w5 = exists_stabilizing_weight(dtype, cfg5);
  REQUIRE(w5.has_value());
  CHECK(w5->w == std::vector<Rat>(5, Rat(4, 15)));
  CHECK(Rat(1, 5) < w5->w[0]);
  CHECK(w5->w[0] < Rat(1, 3));
}

TEST_CASE("genericity of exponents") {
  // Non-integer signed sums: shifted by an irrational-free offset 1/7 each.
  SpectralData good({Rat(1, 7), Rat(2, 7), Rat(3, 7), Rat(-1, 7)},
                    {Rat(1, 49), Rat(2, 49), Rat(3, 49), Rat(-5, 7) - Rat(6, 49)}, 0);
  CHECK(genericity_check(good));

  SpectralData bad({Rat(1, 8), Rat(1, 8), Rat(1, 8), Rat(1, 8)},
                   {Rat(-1, 8), Rat(-1, 8), Rat(-1, 8), Rat(-1, 8)}, 0);
  CHECK(!genericity_check(bad));  // the all-mixed sum is 0
}

TEST_CASE("wall census") {
  CHECK(wall_list(4, 0).size() == 12);
  // n=3: only walls of the displayed shapes.
  for (const Wall& w : wall_list(3, 0)) {
    int m1 = static_cast<int>(w.I1.size());
    int lhs = w.d - 2 * w.k;
    CHECK((lhs == 0 || lhs == 2 || lhs == -2));
    CHECK(m1 <= 3);
  }
  // Sum wall w1+...+wn = 2 present for every n >= 2: k with d-2k = -2, I1 empty.
  for (int n = 4; n <= 6; ++n) {
    bool found = false;
    for (const Wall& w : wall_list(n, 0))
      found |= (w.I1.empty() && w.d - 2 * w.k == -2) ||
               (static_cast<int>(w.I1.size()) == n && w.d - 2 * w.k == 2);
    CHECK(found);
  }
}

TEST_CASE("n=4 chamber census") {
  ChamberReport rep = chamber_census_n4();
  CHECK(rep.chamber_count == 16);
  CHECK(!n4_moduli_nonempty(Weights({Rat(1, 10), Rat(1, 10), Rat(1, 10), Rat(9, 10)})));
  // The exhaustive representative sits in the sum < 2 half-space.
  Weights rep3(std::vector<Rat>{Rat(1, 2), Rat(1, 2), Rat(1, 2), Rat(0)});
  CHECK(n4_moduli_nonempty(rep3));
  CHECK(rep3.w[0] + rep3.w[1] + rep3.w[2] + rep3.w[3] < 2);
}

TEST_CASE("admissibility") {
  CHECK(is_admissible(Weights(std::vector<Rat>(5, Rat(1, 4))), -1));
  CHECK(!is_admissible(Weights({Rat(1, 16), Rat(1, 16), Rat(1, 16), Rat(1, 2)}), 0));
  CHECK(!is_admissible(Weights(std::vector<Rat>(5, Rat(0))), -1));
  CHECK_THROWS(is_admissible(Weights(std::vector<Rat>(4, Rat(1, 2))), 0));  // on-wall
}

TEST_CASE("main chart membership") {
  PointConfig cfg = n5_config();
  CHECK(main_chart_membership(chart_bundle_n5(2, 5), cfg));
  ParabolicBundle on_factor(0, -1,
                            {ProjPoint({1, 0}), ProjPoint({1, 1}), ProjPoint({0, 1}),
                             ProjPoint({1, 1}), ProjPoint({2, 1})});
  CHECK(!main_chart_membership(on_factor, cfg));
  // All five on one O(-1): z-4 interpolant again, now including infinity,
  // whose fiber in the leading frame is (1:1) for f = z-4, c = 1.
  auto on_line = [](const Rat& t) { return ProjPoint({t - 4, 1}); };
  ParabolicBundle flat(0, -1,
                       {on_line(2), on_line(3), on_line(0), on_line(1), ProjPoint({1, 1})});
  CHECK(!main_chart_membership(flat, cfg));
}

TEST_CASE("wall crossing family") {
  std::vector<Rat> u{Rat(0), Rat(2), Rat(3), Rat(5)};
  std::vector<Rat> v{Rat(1), Rat(7), Rat(0), Rat(4)};
  ParabolicBundle l1 = wall_crossing_family(0, {0, 1}, 4, u, v);
  CHECK(l1.l[0] == ProjPoint({1, 0}));
  CHECK(l1.l[1] == ProjPoint({1, 0}));
  CHECK(l1.l[2] == ProjPoint({0, 1}));

  PointConfig cfg4(std::vector<Rat>{Rat(2)});
  ParabolicBundle dec = wall_crossing_family(1, {0, 1}, 4, {0, 0, 0, 0}, {0, 0, 0, 0});
  CHECK(!is_undecomposable(dec, cfg4));

  // Small nonzero eps with generic data is stable on both sides of the wall
  // H_0(0, I1): weights near the wall from either side.
  ParabolicBundle fam = wall_crossing_family(Rat(1, 100), {0, 1}, 4, u, v);
  Weights below({Rat(1, 2) - Rat(1, 50), Rat(1, 2), Rat(1, 2), Rat(1, 2)});
  Weights above({Rat(1, 2) + Rat(1, 50), Rat(1, 2), Rat(1, 2), Rat(1, 2)});
  CHECK(is_stable(fam, cfg4, below));
  CHECK(is_stable(fam, cfg4, above));
}

TEST_CASE("stability index monotone in I") {
  RatGen gen(9);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<Rat> wv;
    for (int i = 0; i < 5; ++i) {
      Rat x = gen();
      wv.push_back(x < 0 ? -x : x);
      if (wv.back() > 1) wv.back() = Rat(1, 2);
    }
    Weights w(wv);
    ParabolicBundle b = chart_bundle_n5(2, 5);
    Rat prev = stability_index(b, w, 0, {});
    std::vector<int> I;
    for (int i = 0; i < 5; ++i) {
      I.push_back(i);
      Rat cur = stability_index(b, w, 0, I);
      CHECK(cur <= prev);
      prev = cur;
    }
  }
}

TEST_CASE("random undecomposable bundles admit stabilizing weights") {
  RatGen gen(123);
  PointConfig cfg = n5_config();
  int tested = 0;
  while (tested < 25) {
    std::vector<ProjPoint> dirs;
    for (int i = 0; i < 5; ++i) dirs.push_back(ProjPoint({gen(), 1}));
    ParabolicBundle b(0, 0, dirs);
    bool undec = is_undecomposable(b, cfg);
    auto w = exists_stabilizing_weight(b, cfg);
    CHECK(undec == w.has_value());
    if (w.has_value()) CHECK(is_stable(b, cfg, *w));
    ++tested;
  }
}
