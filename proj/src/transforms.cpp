#include "garnier/transforms.hpp"

#include "garnier/matrix.hpp"

#include <stdexcept>
#include <utility>

namespace garnier {

RankOneTwist::RankOneTwist(std::vector<Rat> exponents) : mu(std::move(exponents)) {
  Rat s = 0;
  for (const Rat& m : mu) s += m;
  if (!is_integer(s)) throw std::invalid_argument("twist exponents must have integral sum");
  degree = -numerator(s).convert_to<int>();
}

RankOneTwist RankOneTwist::inverse() const {
  std::vector<Rat> neg;
  neg.reserve(mu.size());
  for (const Rat& m : mu) neg.push_back(-m);
  return RankOneTwist(std::move(neg));
}

SpectralData twist(const SpectralData& sd, const RankOneTwist& tw) {
  if (static_cast<int>(tw.mu.size()) != sd.n())
    throw std::invalid_argument("twist exponent count mismatch");
  std::vector<Rat> plus, minus;
  for (int i = 0; i < sd.n(); ++i) {
    plus.push_back(sd.nu_plus(i) + tw.mu[i]);
    minus.push_back(sd.nu_minus(i) + tw.mu[i]);
  }
  return SpectralData(std::move(plus), std::move(minus), sd.degree() + 2 * tw.degree);
}

SpectralData elm_minus(int i, const SpectralData& sd) {
  if (i < 0 || i >= sd.n()) throw std::out_of_range("elm pole index");
  std::vector<Rat> plus, minus;
  for (int j = 0; j < sd.n(); ++j) {
    plus.push_back(j == i ? sd.nu_minus(j) + 1 : sd.nu_plus(j));
    minus.push_back(j == i ? sd.nu_plus(j) : sd.nu_minus(j));
  }
  return SpectralData(std::move(plus), std::move(minus), sd.degree() - 1);
}

SpectralData elm_plus(int i, const SpectralData& sd) {
  if (i < 0 || i >= sd.n()) throw std::out_of_range("elm pole index");
  std::vector<Rat> plus, minus;
  for (int j = 0; j < sd.n(); ++j) {
    plus.push_back(j == i ? sd.nu_minus(j) : sd.nu_plus(j));
    minus.push_back(j == i ? sd.nu_plus(j) - 1 : sd.nu_minus(j));
  }
  return SpectralData(std::move(plus), std::move(minus), sd.degree() + 1);
}

Weights elm_weights(int i, const Weights& w) {
  if (i < 0 || i >= w.n()) throw std::out_of_range("elm weight index");
  std::vector<Rat> out = w.w;
  out[i] = 1 - out[i];
  return Weights(std::move(out));
}

ParabolicBundle twist_bundle(const ParabolicBundle& b, int k) {
  return ParabolicBundle(b.e1 + k, b.e2 + k, b.l);
}

namespace {

Rat pole_power(const Rat& v, int k) {
  Rat out = 1;
  for (int i = 0; i < k; ++i) out *= v;
  return out;
}

}  // namespace

ParabolicBundle elm_minus_bundle(int i, const ParabolicBundle& b, const PointConfig& config) {
  int n = b.n();
  if (config.n() != n) throw std::invalid_argument("configuration size mismatch");
  if (i < 0 || i >= n) throw std::out_of_range("elm pole index");
  const auto& poles = config.poles();
  int e1 = b.e1, e2 = b.e2;
  std::vector<std::array<Rat, 2>> dirs;
  dirs.reserve(n);
  for (const ProjPoint& p : b.l) dirs.push_back({p[0], p[1]});
  bool at_inf = poles[i].inf;
  Rat x = dirs[i][0], y = dirs[i][1];

  if (x != 0 && y != 0) {
    // Move the parabolic onto the second factor with the upper-triangular
    // automorphism [[1, q(z)], [0, 1]], q = s or s*z^(e1-e2) when the
    // transformed pole sits at infinity.
    Rat s = x / y;
    int gap = e1 - e2;
    auto qval = [&](int j) -> Rat {
      if (poles[j].inf) return (at_inf || gap == 0) ? s : Rat(0);
      return at_inf ? s * pole_power(poles[j].v, gap) : s;
    };
    for (int j = 0; j < n; ++j) dirs[j] = {dirs[j][0] - qval(j) * dirs[j][1], dirs[j][1]};
    y = dirs[i][1];
  }

  bool drop_first = y != 0;  // parabolic spans the second factor
  if (at_inf) {
    if (drop_first) {
      e1 -= 1;
      dirs[i] = {1, 0};
    } else {
      e2 -= 1;
      dirs[i] = {0, 1};
    }
  } else {
    const Rat& p = poles[i].v;
    if (drop_first) {
      e1 -= 1;
      dirs[i] = {1, 0};
      for (int j = 0; j < n; ++j)
        if (j != i && !poles[j].inf) dirs[j] = {dirs[j][0], (poles[j].v - p) * dirs[j][1]};
    } else {
      e2 -= 1;
      dirs[i] = {0, 1};
      for (int j = 0; j < n; ++j)
        if (j != i && !poles[j].inf) dirs[j] = {(poles[j].v - p) * dirs[j][0], dirs[j][1]};
    }
  }
  if (e1 < e2) {
    std::swap(e1, e2);
    for (auto& d : dirs) std::swap(d[0], d[1]);
  }
  std::vector<ProjPoint> out;
  out.reserve(n);
  for (const auto& d : dirs) out.push_back(ProjPoint({d[0], d[1]}));
  return ParabolicBundle(e1, e2, std::move(out));
}

ParabolicBundle elm_plus_bundle(int i, const ParabolicBundle& b, const PointConfig& config) {
  return twist_bundle(elm_minus_bundle(i, b, config), 1);
}

bool bundle_equivalent(const ParabolicBundle& a, const ParabolicBundle& b,
                       const PointConfig& config) {
  if (a.e1 != b.e1 || a.e2 != b.e2 || a.n() != b.n()) return false;
  int n = a.n();
  if (config.n() != n) throw std::invalid_argument("configuration size mismatch");
  const auto& poles = config.poles();
  int gap = a.e1 - a.e2;

  if (gap > 0) {
    // Automorphisms are [[r, q(z)], [0, s]] with deg q <= gap and r,s
    // nonzero. Each pole imposes one homogeneous linear condition on
    // (r, q_0..q_gap, s): (r a0 + q(p) a1) b1 - s a1 b0 = 0, with q(p)
    // replaced by the top coefficient q_gap in the leading frame at
    // infinity. Invertibility means a kernel vector with r, s != 0.
    std::vector<std::vector<Rat>> rows;
    for (int j = 0; j < n; ++j) {
      Rat a0 = a.l[j][0], a1 = a.l[j][1];
      Rat b0 = b.l[j][0], b1 = b.l[j][1];
      std::vector<Rat> row(gap + 3, Rat(0));
      row[0] = a0 * b1;
      if (poles[j].inf) {
        row[1 + gap] = a1 * b1;
      } else {
        Rat pw = 1;
        for (int k = 0; k <= gap; ++k) {
          row[1 + k] = a1 * b1 * pw;
          pw *= poles[j].v;
        }
      }
      row[gap + 2] = -a1 * b0;
      rows.push_back(row);
    }
    Mat<Rat> M(rows);
    auto ker = M.kernel();
    for (const auto& v : ker)
      if (v[0] != 0 && v[gap + 2] != 0) return true;
    // Combinations of kernel vectors may still have both entries nonzero.
    for (size_t p = 0; p < ker.size(); ++p)
      for (size_t q = p + 1; q < ker.size(); ++q)
        if (ker[p][0] + ker[q][0] != 0 && ker[p][gap + 2] + ker[q][gap + 2] != 0) return true;
    return false;
  }

  // Equal splitting degrees: any constant invertible matrix acts, at
  // infinity included. One linear condition per pole on the 4 entries.
  std::vector<std::vector<Rat>> rows;
  for (int j = 0; j < n; ++j) {
    Rat a0 = a.l[j][0], a1 = a.l[j][1];
    Rat b0 = b.l[j][0], b1 = b.l[j][1];
    // (c00 a0 + c01 a1) b1 - (c10 a0 + c11 a1) b0 = 0
    rows.push_back({a0 * b1, a1 * b1, -a0 * b0, -a1 * b0});
  }
  Mat<Rat> M(rows);
  auto ker = M.kernel();
  if (ker.empty()) return false;
  auto det_of = [](const std::vector<Rat>& v) { return v[0] * v[3] - v[1] * v[2]; };
  for (const auto& v : ker)
    if (det_of(v) != 0) return true;
  for (size_t p = 0; p < ker.size(); ++p)
    for (size_t q = p + 1; q < ker.size(); ++q) {
      std::vector<Rat> sum(4);
      for (int k = 0; k < 4; ++k) sum[k] = ker[p][k] + ker[q][k];
      if (det_of(sum) != 0) return true;
    }
  return false;
}

std::vector<Rat> elm_chart_map_n(const PointConfig& config, const std::vector<Rat>& u) {
  if (!config.is_normalized()) throw std::invalid_argument("chart map needs a normalized configuration");
  if (static_cast<int>(u.size()) != config.n() - 3)
    throw std::invalid_argument("chart coordinate count mismatch");
  std::vector<Rat> v = u;
  v.push_back(0);
  v.push_back(1);
  v.push_back(0);
  return v;
}

}  // namespace garnier
