#pragma once

#include "adelink/braid.hpp"

namespace adelink {

struct OracleParams {
  int samples_per_segment = 64;
  double detour_radius = 0.125;  // fraction of the segment, < 1/2
  double rounding_tolerance = 1e-6;
  double proximity_epsilon = 1e-9;

  void validate() const;
};

struct NumericLinkingResult {
  AbelianizationVector ab;
  std::vector<double> residuals;  // |winding - nearest integer| per positive root
};

// Numerical oracle for the abelianization: builds the literal loop in the
// complexified hyperplane-arrangement complement for a pure word and tracks
// the continuous argument of every root functional along it. The base point
// x0 satisfies x0.e_i = -1 for all i; each letter's segment detours around
// its single wall crossing by a half-rotation whose sense follows the
// letter's exponent.
NumericLinkingResult numeric_linking(const RootSystem& rs, const BraidWord& w,
                                     const OracleParams& p = {});

}  // namespace adelink
