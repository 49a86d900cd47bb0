#pragma once

#include <gmpxx.h>

#include <vector>

#include "adelink/error.hpp"

namespace adelink {

// Exact rational matrix. No floating-point enters this module.
struct QMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<mpq_class> a;

  QMatrix() = default;
  QMatrix(int r, int c) : rows(r), cols(c), a(std::size_t(r) * c) {}

  mpq_class& at(int r, int c) { return a[std::size_t(r) * cols + c]; }
  const mpq_class& at(int r, int c) const { return a[std::size_t(r) * cols + c]; }
};

struct ZMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<mpz_class> a;

  ZMatrix() = default;
  ZMatrix(int r, int c) : rows(r), cols(c), a(std::size_t(r) * c) {}

  mpz_class& at(int r, int c) { return a[std::size_t(r) * cols + c]; }
  const mpz_class& at(int r, int c) const { return a[std::size_t(r) * cols + c]; }

  static ZMatrix identity(int n) {
    ZMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  bool operator==(const ZMatrix& o) const = default;
};

ZMatrix operator*(const ZMatrix& x, const ZMatrix& y);

// Exact rational basis of the null space; empty iff the matrix is injective.
std::vector<std::vector<mpq_class>> kernel_basis(const QMatrix& m);

// U * M * V = D with U, V unimodular and D diagonal with divisibility
// d_1 | d_2 | ... ; the factorization is re-multiplied and checked before
// returning.
struct SmithForm {
  ZMatrix U, V, D;
  int rank = 0;
  std::vector<mpz_class> divisors;  // nonzero invariant factors
};

SmithForm smith_form(const ZMatrix& m);

// Either an integer solution of M x = b, or a rational certificate y with
// y.M integral and y.b non-integral (which re-validates by multiplication).
struct IntegerSolveResult {
  bool feasible = false;
  std::vector<mpz_class> x;
  std::vector<mpq_class> certificate;
};

IntegerSolveResult integer_solve(const ZMatrix& m, const std::vector<mpz_class>& b);

// Basis of the lattice {x integral : M x = 0}, from the Smith form.
std::vector<std::vector<mpz_class>> integer_kernel_basis(const ZMatrix& m);

// Exact determinant by fraction-free (Bareiss) elimination.
mpz_class determinant(const ZMatrix& m);

}  // namespace adelink
