#include "adelink/exactla.hpp"

#include <algorithm>

namespace adelink {

ZMatrix operator*(const ZMatrix& x, const ZMatrix& y) {
  if (x.cols != y.rows) fail(ErrorCode::DimensionMismatch, "matrix product");
  ZMatrix z(x.rows, y.cols);
  for (int i = 0; i < x.rows; ++i)
    for (int k = 0; k < x.cols; ++k) {
      const mpz_class& v = x.at(i, k);
      if (v == 0) continue;
      for (int j = 0; j < y.cols; ++j) z.at(i, j) += v * y.at(k, j);
    }
  return z;
}

std::vector<std::vector<mpq_class>> kernel_basis(const QMatrix& m) {
  QMatrix r = m;
  std::vector<int> pivot_col;
  int row = 0;
  for (int col = 0; col < r.cols && row < r.rows; ++col) {
    int piv = -1;
    for (int i = row; i < r.rows; ++i)
      if (r.at(i, col) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != row)
      for (int j = 0; j < r.cols; ++j) std::swap(r.at(piv, j), r.at(row, j));
    mpq_class inv = 1 / r.at(row, col);
    for (int j = 0; j < r.cols; ++j) r.at(row, j) *= inv;
    for (int i = 0; i < r.rows; ++i) {
      if (i == row || r.at(i, col) == 0) continue;
      mpq_class f = r.at(i, col);
      for (int j = 0; j < r.cols; ++j) r.at(i, j) -= f * r.at(row, j);
    }
    pivot_col.push_back(col);
    ++row;
  }

  std::vector<bool> is_pivot(r.cols, false);
  for (int c : pivot_col) is_pivot[c] = true;
  std::vector<std::vector<mpq_class>> basis;
  for (int free = 0; free < r.cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<mpq_class> v(r.cols, 0);
    v[free] = 1;
    for (int k = 0; k < int(pivot_col.size()); ++k) v[pivot_col[k]] = -r.at(k, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

namespace {

void swap_rows(ZMatrix& m, int i, int j) {
  for (int c = 0; c < m.cols; ++c) std::swap(m.at(i, c), m.at(j, c));
}

void swap_cols(ZMatrix& m, int i, int j) {
  for (int r = 0; r < m.rows; ++r) std::swap(m.at(r, i), m.at(r, j));
}

void add_row(ZMatrix& m, int dst, int src, const mpz_class& f) {
  for (int c = 0; c < m.cols; ++c) m.at(dst, c) += f * m.at(src, c);
}

void add_col(ZMatrix& m, int dst, int src, const mpz_class& f) {
  for (int r = 0; r < m.rows; ++r) m.at(r, dst) += f * m.at(r, src);
}

void negate_row(ZMatrix& m, int i) {
  for (int c = 0; c < m.cols; ++c) m.at(i, c) = -m.at(i, c);
}

}  // namespace

SmithForm smith_form(const ZMatrix& m) {
  SmithForm s;
  s.D = m;
  s.U = ZMatrix::identity(m.rows);
  s.V = ZMatrix::identity(m.cols);
  ZMatrix& D = s.D;

  int t = 0;
  const int bound = std::min(m.rows, m.cols);
  while (t < bound) {
    // Minimal-absolute-value pivot in the trailing block tames entry growth.
    int pr = -1, pc = -1;
    for (int i = t; i < D.rows; ++i)
      for (int j = t; j < D.cols; ++j) {
        if (D.at(i, j) == 0) continue;
        if (pr < 0 || cmp(abs(D.at(i, j)), abs(D.at(pr, pc))) < 0) {
          pr = i;
          pc = j;
        }
      }
    if (pr < 0) break;  // trailing block is zero
    if (pr != t) {
      swap_rows(D, t, pr);
      swap_rows(s.U, t, pr);
    }
    if (pc != t) {
      swap_cols(D, t, pc);
      swap_cols(s.V, t, pc);
    }

    bool clean = true;
    for (int i = t + 1; i < D.rows; ++i) {
      if (D.at(i, t) == 0) continue;
      mpz_class q = D.at(i, t) / D.at(t, t);
      if (q != 0) {
        add_row(D, i, t, -q);
        add_row(s.U, i, t, -q);
      }
      if (D.at(i, t) != 0) clean = false;
    }
    for (int j = t + 1; j < D.cols; ++j) {
      if (D.at(t, j) == 0) continue;
      mpz_class q = D.at(t, j) / D.at(t, t);
      if (q != 0) {
        add_col(D, j, t, -q);
        add_col(s.V, j, t, -q);
      }
      if (D.at(t, j) != 0) clean = false;
    }
    if (!clean) continue;  // smaller remainder became the new pivot candidate

    // Pivot must divide every entry of the trailing block; if not, fold the
    // offending row in and restart the reduction at this corner.
    bool divides = true;
    for (int i = t + 1; i < D.rows && divides; ++i)
      for (int j = t + 1; j < D.cols; ++j)
        if (D.at(i, j) % D.at(t, t) != 0) {
          add_row(D, t, i, 1);
          add_row(s.U, t, i, 1);
          divides = false;
          break;
        }
    if (!divides) continue;

    if (D.at(t, t) < 0) {
      negate_row(D, t);
      negate_row(s.U, t);
    }
    ++t;
  }

  s.rank = t;
  for (int i = 0; i < t; ++i) s.divisors.push_back(D.at(i, i));
  if (s.U * m * s.V != D)
    fail(ErrorCode::DimensionMismatch, "Smith form re-multiplication failed");
  return s;
}

IntegerSolveResult integer_solve(const ZMatrix& m, const std::vector<mpz_class>& b) {
  if (int(b.size()) != m.rows)
    fail(ErrorCode::DimensionMismatch, "right-hand side size");
  SmithForm s = smith_form(m);
  std::vector<mpz_class> c(m.rows, 0);
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.rows; ++j) c[i] += s.U.at(i, j) * b[j];

  IntegerSolveResult out;
  auto certify = [&](int row, const mpz_class& denom) {
    out.feasible = false;
    out.certificate.assign(m.rows, 0);
    for (int j = 0; j < m.rows; ++j)
      out.certificate[j] = mpq_class(s.U.at(row, j), denom);
    for (auto& q : out.certificate) q.canonicalize();
  };

  std::vector<mpz_class> y(m.cols, 0);
  for (int i = 0; i < m.rows; ++i) {
    if (i < s.rank) {
      if (c[i] % s.divisors[i] != 0) {
        // y = U_i / d_i: y.M is row i of D.V^{-1} over d_i, integral; y.b is
        // c_i / d_i, non-integral.
        certify(i, s.divisors[i]);
        return out;
      }
      y[i] = c[i] / s.divisors[i];
    } else if (c[i] != 0) {
      // y = U_i / (2 c_i): y.M = 0 and y.b = 1/2.
      certify(i, 2 * c[i]);
      return out;
    }
  }
  out.feasible = true;
  out.x.assign(m.cols, 0);
  for (int i = 0; i < m.cols; ++i)
    for (int j = 0; j < std::min(m.cols, s.rank); ++j)
      out.x[i] += s.V.at(i, j) * y[j];
  return out;
}

std::vector<std::vector<mpz_class>> integer_kernel_basis(const ZMatrix& m) {
  SmithForm s = smith_form(m);
  std::vector<std::vector<mpz_class>> basis;
  for (int j = s.rank; j < m.cols; ++j) {
    std::vector<mpz_class> v(m.cols);
    for (int i = 0; i < m.cols; ++i) v[i] = s.V.at(i, j);
    basis.push_back(std::move(v));
  }
  return basis;
}

mpz_class determinant(const ZMatrix& m) {
  if (m.rows != m.cols) fail(ErrorCode::DimensionMismatch, "determinant of non-square");
  int n = m.rows;
  if (n == 0) return 1;
  ZMatrix a = m;
  mpz_class prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (a.at(k, k) == 0) {
      int piv = -1;
      for (int i = k + 1; i < n; ++i)
        if (a.at(i, k) != 0) {
          piv = i;
          break;
        }
      if (piv < 0) return 0;
      swap_rows(a, k, piv);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) {
        a.at(i, j) = a.at(k, k) * a.at(i, j) - a.at(i, k) * a.at(k, j);
        mpz_divexact(a.at(i, j).get_mpz_t(), a.at(i, j).get_mpz_t(), prev.get_mpz_t());
      }
    prev = a.at(k, k);
  }
  return sign * a.at(n - 1, n - 1);
}

}  // namespace adelink
