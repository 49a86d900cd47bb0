#include "adelink/winding.hpp"

#include <cmath>
#include <complex>
#include <numbers>

namespace adelink {

void OracleParams::validate() const {
  if (samples_per_segment <= 0 || detour_radius <= 0 || rounding_tolerance <= 0 ||
      proximity_epsilon <= 0)
    fail(ErrorCode::DimensionMismatch, "oracle parameters must be positive");
  if (detour_radius >= 0.5)
    fail(ErrorCode::DimensionMismatch, "detour radius must be below 1/2");
}

namespace {

using cplx = std::complex<double>;

// x0 with x0.e_i = -1 for all i: solve Q x = (-1,...,-1).
std::vector<double> base_point(const RootSystem& rs) {
  int n = rs.rank();
  std::vector<std::vector<double>> m(n, std::vector<double>(n + 1));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) m[i][j] = double(rs.form.at(i, j));
    m[i][n] = -1.0;
  }
  for (int col = 0; col < n; ++col) {
    int piv = col;
    for (int r = col + 1; r < n; ++r)
      if (std::abs(m[r][col]) > std::abs(m[piv][col])) piv = r;
    std::swap(m[col], m[piv]);
    for (int r = 0; r < n; ++r) {
      if (r == col) continue;
      double fac = m[r][col] / m[col][col];
      for (int c = col; c <= n; ++c) m[r][c] -= fac * m[col][c];
    }
  }
  std::vector<double> x(n);
  for (int i = 0; i < n; ++i) x[i] = m[i][n] / m[i][i];
  return x;
}

}  // namespace

NumericLinkingResult numeric_linking(const RootSystem& rs, const BraidWord& w,
                                     const OracleParams& p) {
  p.validate();
  if (!is_pure(rs, w))
    fail(ErrorCode::NotPure, "the oracle is only defined on pure words");

  const int n = rs.rank();
  const int np = rs.num_positive;
  const double pi = std::numbers::pi;

  // Precompute Q.alpha for each positive root, so f_alpha(z) = (Q.alpha).z.
  std::vector<std::vector<double>> functional(np, std::vector<double>(n, 0.0));
  for (int k = 0; k < np; ++k)
    for (int j = 0; j < n; ++j)
      for (int i = 0; i < n; ++i)
        functional[k][j] += double(rs.roots[k].coeffs[i]) * double(rs.form.at(i, j));

  std::vector<double> x0 = base_point(rs);

  // Vertices of the piecewise-linear real path.
  std::vector<std::vector<double>> pts{x0};
  WeylElement prefix = identity_element(rs);
  for (const BraidLetter& l : w.letters) {
    prefix = compose(rs, prefix, simple_reflection(rs, l.vertex));
    std::vector<double> y(n, 0.0);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) y[i] += double(prefix.matrix.at(i, j)) * x0[j];
    pts.push_back(y);
  }

  std::vector<double> total_arg(np, 0.0);
  std::vector<cplx> prev(np);
  bool have_prev = false;

  auto visit = [&](const std::vector<cplx>& z) {
    for (int k = 0; k < np; ++k) {
      cplx f = 0.0;
      for (int j = 0; j < n; ++j) f += functional[k][j] * z[j];
      if (std::abs(f) < p.proximity_epsilon)
        fail(ErrorCode::PathTooCloseToHyperplane,
             "sample within proximity epsilon of hyperplane " + std::to_string(k));
      if (have_prev) total_arg[k] += std::arg(f / prev[k]);
      prev[k] = f;
    }
    have_prev = true;
  };

  auto segment_point = [&](int seg, cplx c) {
    std::vector<cplx> z(n);
    for (int j = 0; j < n; ++j)
      z[j] = pts[seg][j] + c * (pts[seg + 1][j] - pts[seg][j]);
    return z;
  };

  std::vector<cplx> start(n);
  for (int j = 0; j < n; ++j) start[j] = x0[j];
  visit(start);

  const double R = p.detour_radius;
  const int arc_samples = std::max(2, p.samples_per_segment / 2);
  const int line_samples = std::max(1, p.samples_per_segment / 4);

  for (std::size_t seg = 0; seg < w.letters.size(); ++seg) {
    int eps = w.letters[seg].exponent;
    // Straight approach up to c = 1/2 - R.
    for (int s = 1; s <= line_samples; ++s)
      visit(segment_point(int(seg), (0.5 - R) * double(s) / line_samples));
    // Half-rotation about c = 1/2: positive letters pass below the real
    // axis (angle pi -> 2pi), which yields +1/2 a turn of every crossed
    // functional; negative letters reverse the sense.
    for (int s = 1; s <= arc_samples; ++s) {
      double phi = pi + double(eps) * pi * double(s) / arc_samples;
      visit(segment_point(int(seg), cplx(0.5, 0.0) + R * std::polar(1.0, phi)));
    }
    // Straight run-out to c = 1.
    for (int s = 1; s <= line_samples; ++s)
      visit(segment_point(int(seg), 0.5 + R + (0.5 - R) * double(s) / line_samples));
  }

  NumericLinkingResult out;
  out.ab.half_units.assign(np, 0);
  out.residuals.resize(np);
  for (int k = 0; k < np; ++k) {
    double winding = total_arg[k] / (2.0 * pi);
    double nearest = std::round(winding);
    out.residuals[k] = std::abs(winding - nearest);
    if (out.residuals[k] > p.rounding_tolerance)
      fail(ErrorCode::RoundingResidualTooLarge,
           "winding residual " + std::to_string(out.residuals[k]) +
               " at positive root index " + std::to_string(k));
    out.ab.half_units[k] = 2 * std::int64_t(std::llround(winding));
  }
  return out;
}

}  // namespace adelink
