#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "garnier/connection.hpp"
#include "garnier/roots.hpp"

#include <random>

using namespace garnier;

namespace {

using Chart = ConnectionChart<Rat>;

struct RatGen {
  std::mt19937_64 rng;
  explicit RatGen(uint64_t seed) : rng(seed) {}
  Rat operator()(int lim = 10) {
    std::uniform_int_distribution<int> num(-lim, lim);
    std::uniform_int_distribution<int> den(1, lim);
    return Rat(num(rng), den(rng));
  }
};

// Random chart with exponent sum pinned to 1 (degree -1 labels).
Chart random_chart(RatGen& gen, int n, Frame frame, bool higgs) {
  Chart chart;
  chart.frame = frame;
  while (static_cast<int>(chart.t.size()) < n - 3) {
    Rat t = gen();
    bool ok = t != 0 && t != 1;
    for (const Rat& s : chart.t) ok = ok && t != s;
    if (ok) chart.t.push_back(t);
  }
  for (int i = 0; i < n; ++i) {
    chart.nu_plus.push_back(gen());
    chart.nu_minus.push_back(gen());
  }
  Rat total = 0;
  for (int i = 0; i < n; ++i) total += chart.nu_plus[i] + chart.nu_minus[i];
  chart.nu_plus[0] += 1 - total;
  for (int i = 0; i < n - 3; ++i) {
    chart.u.push_back(gen());
    chart.c.push_back(gen());
  }
  chart.lambda = higgs ? Rat(0) : Rat(1);
  return chart;
}

// Numerator polynomial of phi against the full denominator z(z-1)prod(z-t_j).
Poly<Rat> phi_numerator(const Chart& chart, const Mat2Form<Rat>& A) {
  Poly<Rat> den = Poly<Rat>{0, 1} * Poly<Rat>{-1, 1};
  for (const Rat& t : chart.t) den = den * Poly<Rat>{-t, 1};
  RatFun<Rat> scaled = phi_entry(A) * RatFun<Rat>::from_poly(den);
  REQUIRE(scaled.is_poly());
  return scaled.num();
}

}  // namespace

TEST_CASE("nabla0 residues read off the displayed blocks") {
  RatGen gen(42);
  Chart chart = random_chart(gen, 4, Frame::DegMinus1, false);
  chart.t = {2};
  Mat2Form<Rat> A = nabla0_matrix(chart);
  auto r0 = A.residue(0);
  CHECK(r0[0][0] == chart.nu_minus[1]);
  CHECK(r0[0][1] == 0);
  CHECK(r0[1][0] == chart.rho());
  CHECK(r0[1][1] == chart.nu_plus[1]);
}

TEST_CASE("apparent divisor of nabla0 is the custom pole set") {
  RatGen gen(7);
  for (int trial = 0; trial < 10; ++trial) {
    Chart chart = random_chart(gen, 5, Frame::DegMinus1, false);
    chart.c = {0, 0};
    if (chart.rho() == 0) continue;
    Poly<Rat> num = phi_numerator(chart, connection_matrix(chart));
    Poly<Rat> expect = Rat(-1) * chart.rho() * poly_from_roots(chart.t);
    CHECK(num == expect);
  }
}

TEST_CASE("rho = 0 makes nabla0 reducible along e1") {
  RatGen gen(13);
  Chart chart = random_chart(gen, 5, Frame::DegMinus1, false);
  // Force rho to zero while keeping the exponent sum at 1.
  chart.nu_plus[2] += chart.rho();
  chart.nu_minus[2] -= chart.rho();
  REQUIRE(chart.rho() == 0);
  chart.c = {0, 0};
  CHECK(phi_entry(nabla0_matrix(chart)).is_zero());
  CHECK(is_reducible_section(chart));
  chart.c = {1, 0};
  CHECK(!is_reducible_section(chart));
  chart.c = {0, 0};
  chart.nu_plus[2] += 1;
  chart.nu_minus[2] -= 1;
  CHECK(!is_reducible_section(chart));
}

TEST_CASE("Higgs generator residues") {
  RatGen gen(3);
  Chart chart = random_chart(gen, 5, Frame::DegMinus1, true);
  chart.u = {3, Rat(5, 2)};
  chart.t = {2, 7};
  Mat2Form<Rat> Th = theta_matrix(chart, 0);
  auto rt = Th.residue(2);
  CHECK(rt[0][0] == -3);
  CHECK(rt[0][1] == 9);
  CHECK(rt[1][0] == -1);
  CHECK(rt[1][1] == 3);
  CHECK(rt[0][0] + rt[1][1] == 0);
  CHECK(rt[0][0] * rt[1][1] - rt[0][1] * rt[1][0] == 0);
  auto r0 = Th.residue(0);
  CHECK(r0[0][0] == 0);
  CHECK(r0[0][1] == 0);
  CHECK(r0[1][0] == 1 - 3);
  CHECK(r0[1][1] == 0);
}

TEST_CASE("Higgs apparent divisor contains mu_i and the other poles") {
  // t = 2, u = 3 gives mu = t(u-1)/(u-t) = 4.
  Chart chart;
  chart.frame = Frame::DegMinus1;
  chart.t = {2, 3};
  chart.u = {3, 5};
  chart.c = {1, 0};
  chart.lambda = 0;
  chart.nu_plus.assign(5, Rat(1, 10));
  chart.nu_minus.assign(5, Rat(1, 10));
  Poly<Rat> num = phi_numerator(chart, connection_matrix(chart));
  auto roots = rational_roots(num).roots;
  CHECK(roots == std::vector<Rat>{3, 4});
}

TEST_CASE("connection matrix is linear in (lambda, c)") {
  RatGen gen(19);
  Chart chart = random_chart(gen, 5, Frame::DegMinus1, false);
  Chart a = chart, b = chart;
  a.lambda = 2;
  a.c = {3, -1};
  b.lambda = -5;
  b.c = {Rat(1, 2), 4};
  Chart sum = chart;
  sum.lambda = a.lambda + b.lambda;
  sum.c = {a.c[0] + b.c[0], a.c[1] + b.c[1]};
  CHECK(connection_matrix(a) + connection_matrix(b) == connection_matrix(sum));
  Chart pure = chart;
  pure.lambda = 1;
  pure.c = {0, 0};
  CHECK(connection_matrix(pure) == nabla0_matrix(chart));
}

TEST_CASE("Higgs generators are independent") {
  RatGen gen(23);
  Chart chart = random_chart(gen, 6, Frame::DegMinus1, true);
  // Coefficient matrix of the phi numerators must have full rank n-3.
  std::vector<std::vector<Rat>> rows;
  for (int i = 0; i < 3; ++i) {
    Chart single = chart;
    single.c = {0, 0, 0};
    single.c[i] = 1;
    Poly<Rat> num = phi_numerator(single, connection_matrix(single));
    std::vector<Rat> row;
    for (int k = 0; k <= 3; ++k) row.push_back(num.coeff(k));
    rows.push_back(row);
  }
  CHECK(Mat<Rat>(rows).rank() == 3);
}

TEST_CASE("spectral verification passes on random charts") {
  RatGen gen(57);
  for (int trial = 0; trial < 30; ++trial) {
    int n = 4 + trial % 3;
    Frame frame = trial % 2 ? Frame::Deg0 : Frame::DegMinus1;
    Chart chart = random_chart(gen, n, frame, trial % 5 == 0);
    SpectralReport rep = verify_spectral(chart);
    CHECK(rep.ok);
    if (!rep.ok) MESSAGE(rep.message);
  }
}

TEST_CASE("spectral verification flags a mismatched matrix") {
  RatGen gen(99);
  Chart chart = random_chart(gen, 5, Frame::DegMinus1, false);
  Mat2Form<Rat> A = connection_matrix(chart);
  Chart claim = chart;
  claim.nu_plus[2] += 1;  // pole 0 data
  claim.nu_plus[3] -= 1;  // compensates the exponent sum at pole 1
  SpectralReport rep = verify_spectral(claim, A);
  CHECK(!rep.ok);
  CHECK(rep.message == "failure at pole 0");

  // A wrong parabolic coordinate moves the claimed eigenvector off the
  // residue kernel at that pole.
  Chart skew = chart;
  skew.u[1] += 1;
  rep = verify_spectral(skew, A);
  CHECK(!rep.ok);
  CHECK(rep.message == "failure at pole t_2");
}

TEST_CASE("Higgs residues are nilpotent with the parabolic in the kernel") {
  RatGen gen(31);
  Chart chart = random_chart(gen, 5, Frame::DegMinus1, true);
  REQUIRE(chart.lambda == 0);
  Mat2Form<Rat> A = connection_matrix(chart);
  for (int i = 0; i < 2; ++i) {
    auto r = A.residue(chart.t[i]);
    CHECK(r[0][0] + r[1][1] == 0);
    CHECK(r[0][0] * r[1][1] - r[0][1] * r[1][0] == 0);
    CHECK(r[0][0] * chart.u[i] + r[0][1] == 0);
    CHECK(r[1][0] * chart.u[i] + r[1][1] == 0);
  }
  CHECK(verify_spectral(chart).ok);
}

TEST_CASE("chart from spectral data in both frames") {
  PointConfig cfg({Rat(2), Rat(3)});
  // Degree -1 data.
  std::vector<Rat> vp(5, Rat(1, 4)), vm(5, Rat(1, 4));
  vm[4] = Rat(1, 4) - Rat(1, 4);  // adjust below to reach sum 1
  vp[4] = Rat(1, 2) - Rat(1, 4);
  Rat s = 0;
  for (int i = 0; i < 5; ++i) s += vp[i] + vm[i];
  vp[0] += 1 - s;
  SpectralData sd(vp, vm, -1);
  Chart chart = Chart::from_spectral(cfg, sd, {Rat(4), Rat(5)}, 1, {Rat(1), Rat(2)});
  CHECK(chart.frame == Frame::DegMinus1);
  CHECK(verify_spectral(chart).ok);

  // Degree 0 data relabels the infinity column.
  std::vector<Rat> wp = vp, wm = vm;
  wp[4] = vm[4];      // plus slot on the trivial bundle is nu_inf^-
  wm[4] = vp[4] - 1;  // minus slot is nu_inf^+ - 1
  SpectralData sd0(wp, wm, 0);
  Chart chart0 = Chart::from_spectral(cfg, sd0, {Rat(4), Rat(5)}, 1, {Rat(1), Rat(2)});
  CHECK(chart0.frame == Frame::Deg0);
  CHECK(chart0.nu_plus == chart.nu_plus);
  CHECK(chart0.nu_minus == chart.nu_minus);
  CHECK(verify_spectral(chart0).ok);
}
