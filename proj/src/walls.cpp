#include "garnier/parabolic.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace garnier {

namespace {

std::vector<int> complement(const std::vector<int>& I, int n) {
  std::vector<bool> in(n, false);
  for (int i : I) in[i] = true;
  std::vector<int> out;
  for (int i = 0; i < n; ++i)
    if (!in[i]) out.push_back(i);
  return out;
}

}  // namespace

std::vector<Wall> wall_list(int n, int d) {
  if (n < 3) throw std::invalid_argument("wall_list needs n >= 3");
  std::set<Wall> walls;
  // The hyperplane of (k, I1) meets the open cube iff the equation can take
  // both signs there: d - 2k - #I1 < 0 < d - 2k + #I2.
  for (int k = (d - n) / 2 - 1; 2 * k <= d + n; ++k) {
    for (uint32_t mask = 0; mask < (1u << n); ++mask) {
      std::vector<int> I1;
      for (int i = 0; i < n; ++i)
        if (mask & (1u << i)) I1.push_back(i);
      int m1 = static_cast<int>(I1.size());
      if (!(d - 2 * k - m1 < 0 && 0 < d - 2 * k + (n - m1))) continue;
      // H_d(k, I1) = H_d(d-k, I2); keep the lexicographically smaller label.
      Wall a{d, k, I1};
      Wall b{d, d - k, complement(I1, n)};
      walls.insert(std::min(a, b));
    }
  }
  return std::vector<Wall>(walls.begin(), walls.end());
}

bool n4_moduli_nonempty(const Weights& w) {
  if (w.n() != 4) throw std::invalid_argument("n4 predicate needs 4 weights");
  for (int l = 0; l < 4; ++l) {
    Rat v = -w.w[l];
    for (int i = 0; i < 4; ++i)
      if (i != l) v += w.w[i];
    if (v < 0 || v > 2) return false;
  }
  return true;
}

ChamberReport chamber_census_n4() {
  // Inside the nonempty-moduli region the four remaining walls are
  // w1+w2+w3+w4 = 2 and the three partitions w_i+w_j = w_k+w_l. Chambers
  // are the realizable strict sign patterns; the region is convex, so a
  // sign pattern determines a connected chamber.
  ChamberReport report;
  std::set<std::vector<int>> seen;
  const int steps = 9;
  std::vector<int> idx(4, 1);
  auto splitting_signs = [](const Weights& w) {
    std::vector<int> s;
    Rat total = w.w[0] + w.w[1] + w.w[2] + w.w[3];
    s.push_back(total < 2 ? -1 : (total > 2 ? 1 : 0));
    // Partitions {0,j} vs the rest, j = 1,2,3.
    for (int j = 1; j <= 3; ++j) {
      Rat v = w.w[0] + w.w[j];
      for (int i = 1; i <= 3; ++i)
        if (i != j) v -= w.w[i];
      s.push_back(v < 0 ? -1 : (v > 0 ? 1 : 0));
    }
    return s;
  };
  for (idx[0] = 1; idx[0] < steps; ++idx[0])
    for (idx[1] = 1; idx[1] < steps; ++idx[1])
      for (idx[2] = 1; idx[2] < steps; ++idx[2])
        for (idx[3] = 1; idx[3] < steps; ++idx[3]) {
          Weights w({Rat(idx[0], steps), Rat(idx[1], steps), Rat(idx[2], steps),
                     Rat(idx[3], steps)});
          if (!n4_moduli_nonempty(w)) continue;
          // Interior of the region only.
          bool interior = true;
          for (int l = 0; l < 4 && interior; ++l) {
            Rat v = -w.w[l];
            for (int i = 0; i < 4; ++i)
              if (i != l) v += w.w[i];
            interior = v != 0 && v != 2;
          }
          if (!interior) continue;
          std::vector<int> s = splitting_signs(w);
          if (std::count(s.begin(), s.end(), 0) > 0) continue;  // on a wall
          if (seen.insert(s).second) report.chambers.push_back({s, w});
        }
  report.chamber_count = static_cast<int>(report.chambers.size());
  return report;
}

bool is_admissible(const Weights& w, int d) {
  int n = w.n();
  for (const Wall& wall : wall_list(n, d))
    if (wall.eval(w) == 0) throw std::invalid_argument("weight lies on a wall");
  std::vector<Rat> sorted = w.w;
  std::sort(sorted.begin(), sorted.end(), std::greater<Rat>());
  bool odd = ((d % 2) + 2) % 2 == 1;
  // The binding case for each size #I1 = m+1 puts the largest weights in I1.
  // m = -1 (odd degree, I1 empty) demands sum w > 1.
  for (int m = odd ? -1 : 0; m + 1 <= n; m += 2) {
    Rat v = m;
    for (int i = 0; i < n; ++i) v += (i <= m) ? -sorted[i] : sorted[i];
    if (v <= 0) return false;
  }
  return true;
}

}  // namespace garnier
