#pragma once

/*
 * Small dense exact linear algebra over a field F: row reduction, rank,
 * kernel, and linear solves, all by fraction-free-enough Gaussian
 * elimination with exact division. Sizes here are tiny (a handful of rows),
 * so no pivoting strategy beyond "first nonzero" is needed.
 */

#include <optional>
#include <stdexcept>
#include <vector>

namespace garnier {

template <class F>
class Mat {
 public:
  Mat(int rows, int cols) : r_(rows), c_(cols), a_(rows, std::vector<F>(cols, F(0))) {}
  explicit Mat(std::vector<std::vector<F>> rows)
      : r_(static_cast<int>(rows.size())),
        c_(rows.empty() ? 0 : static_cast<int>(rows[0].size())),
        a_(std::move(rows)) {
    for (const auto& row : a_)
      if (static_cast<int>(row.size()) != c_) throw std::invalid_argument("ragged matrix");
  }
  static Mat identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m.a_[i][i] = F(1);
    return m;
  }

  int rows() const { return r_; }
  int cols() const { return c_; }
  F& at(int i, int j) { return a_[i][j]; }
  const F& at(int i, int j) const { return a_[i][j]; }

  friend Mat operator*(const Mat& x, const Mat& y) {
    if (x.c_ != y.r_) throw std::invalid_argument("matrix product shape mismatch");
    Mat z(x.r_, y.c_);
    for (int i = 0; i < x.r_; ++i)
      for (int k = 0; k < x.c_; ++k)
        for (int j = 0; j < y.c_; ++j) z.a_[i][j] = z.a_[i][j] + x.a_[i][k] * y.a_[k][j];
    return z;
  }
  friend bool operator==(const Mat& x, const Mat& y) { return x.a_ == y.a_; }

  std::vector<F> apply(const std::vector<F>& v) const {
    if (static_cast<int>(v.size()) != c_) throw std::invalid_argument("apply shape mismatch");
    std::vector<F> w(r_, F(0));
    for (int i = 0; i < r_; ++i)
      for (int j = 0; j < c_; ++j) w[i] = w[i] + a_[i][j] * v[j];
    return w;
  }

  // Reduced row echelon form; returns pivot columns.
  std::vector<int> rref() {
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < c_ && row < r_; ++col) {
      int p = -1;
      for (int i = row; i < r_; ++i)
        if (a_[i][col] != F(0)) { p = i; break; }
      if (p < 0) continue;
      std::swap(a_[p], a_[row]);
      F inv = F(1) / a_[row][col];
      for (int j = col; j < c_; ++j) a_[row][j] = a_[row][j] * inv;
      for (int i = 0; i < r_; ++i) {
        if (i == row || a_[i][col] == F(0)) continue;
        F f = a_[i][col];
        for (int j = col; j < c_; ++j) a_[i][j] = a_[i][j] - f * a_[row][j];
      }
      pivots.push_back(col);
      ++row;
    }
    return pivots;
  }

  int rank() const {
    Mat m = *this;
    return static_cast<int>(m.rref().size());
  }

  // Basis of the null space. Free variables are set to 1 one at a time.
  std::vector<std::vector<F>> kernel() const {
    Mat m = *this;
    std::vector<int> pivots = m.rref();
    std::vector<bool> is_pivot(c_, false);
    for (int p : pivots) is_pivot[p] = true;
    std::vector<std::vector<F>> basis;
    for (int free = 0; free < c_; ++free) {
      if (is_pivot[free]) continue;
      std::vector<F> v(c_, F(0));
      v[free] = F(1);
      for (size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = F(0) - m.a_[i][free];
      basis.push_back(std::move(v));
    }
    return basis;
  }

  // One solution of A x = b, if consistent.
  std::optional<std::vector<F>> solve(const std::vector<F>& b) const {
    if (static_cast<int>(b.size()) != r_) throw std::invalid_argument("solve shape mismatch");
    Mat aug(r_, c_ + 1);
    for (int i = 0; i < r_; ++i) {
      for (int j = 0; j < c_; ++j) aug.a_[i][j] = a_[i][j];
      aug.a_[i][c_] = b[i];
    }
    std::vector<int> pivots = aug.rref();
    if (!pivots.empty() && pivots.back() == c_) return std::nullopt;
    std::vector<F> x(c_, F(0));
    for (size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug.a_[i][c_];
    return x;
  }

  F det() const {
    if (r_ != c_) throw std::invalid_argument("determinant of a non-square matrix");
    Mat m = *this;
    F d(1);
    for (int col = 0; col < c_; ++col) {
      int p = -1;
      for (int i = col; i < r_; ++i)
        if (m.a_[i][col] != F(0)) { p = i; break; }
      if (p < 0) return F(0);
      if (p != col) {
        std::swap(m.a_[p], m.a_[col]);
        d = F(0) - d;
      }
      d = d * m.a_[col][col];
      F inv = F(1) / m.a_[col][col];
      for (int i = col + 1; i < r_; ++i) {
        F f = m.a_[i][col] * inv;
        for (int j = col; j < c_; ++j) m.a_[i][j] = m.a_[i][j] - f * m.a_[col][j];
      }
    }
    return d;
  }

 private:
  int r_, c_;
  std::vector<std::vector<F>> a_;
};

}  // namespace garnier
