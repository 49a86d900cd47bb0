#pragma once

#include <cstdint>
#include <vector>

#include "adelink/error.hpp"

namespace adelink {

// Dense integer matrix, small enough for the rank <= 8 world (the largest
// instances are the 240x240 permutation matrices of ZPhi(E8)).
struct IntMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<std::int64_t> a;

  IntMatrix() = default;
  IntMatrix(int r, int c) : rows(r), cols(c), a(std::size_t(r) * c, 0) {}

  std::int64_t& at(int r, int c) { return a[std::size_t(r) * cols + c]; }
  std::int64_t at(int r, int c) const { return a[std::size_t(r) * cols + c]; }

  static IntMatrix identity(int n) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  bool operator==(const IntMatrix& o) const = default;
};

inline IntMatrix operator*(const IntMatrix& x, const IntMatrix& y) {
  if (x.cols != y.rows) fail(ErrorCode::DimensionMismatch, "matrix product");
  IntMatrix z(x.rows, y.cols);
  for (int i = 0; i < x.rows; ++i)
    for (int k = 0; k < x.cols; ++k) {
      std::int64_t v = x.at(i, k);
      if (v == 0) continue;
      for (int j = 0; j < y.cols; ++j) z.at(i, j) += v * y.at(k, j);
    }
  return z;
}

inline std::vector<std::int64_t> operator*(const IntMatrix& m,
                                           const std::vector<std::int64_t>& v) {
  if (m.cols != int(v.size())) fail(ErrorCode::DimensionMismatch, "matrix-vector product");
  std::vector<std::int64_t> w(m.rows, 0);
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j) w[i] += m.at(i, j) * v[j];
  return w;
}

inline IntMatrix transpose(const IntMatrix& m) {
  IntMatrix t(m.cols, m.rows);
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j) t.at(j, i) = m.at(i, j);
  return t;
}

}  // namespace adelink
