#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "adelink/roots.hpp"

namespace adelink {

// A Weyl group element, carried both as an integer matrix on the lattice
// and as the induced permutation of root indices. The two views are kept
// in sync by construction.
struct WeylElement {
  IntMatrix matrix;       // rank x rank, columns are images of the e_i
  std::vector<int> perm;  // perm[idx] = index of the image root

  bool is_identity() const;
  bool operator==(const WeylElement& o) const { return perm == o.perm; }
};

WeylElement identity_element(const RootSystem& rs);

// The reflection s_i . v = v + (v.e_i) e_i.
WeylElement simple_reflection(const RootSystem& rs, int i);

// Function composition: (a o b)(v) = a(b(v)).
WeylElement compose(const RootSystem& rs, const WeylElement& a, const WeylElement& b);

// apply_word([i1,...,ik]) = s_{i1} o s_{i2} o ... o s_{ik}; the rightmost
// letter acts first on arguments.
WeylElement apply_word(const RootSystem& rs, std::span<const int> letters);

std::vector<std::int64_t> apply_to_vector(const WeylElement& w,
                                          const std::vector<int>& coeffs);

// Breadth-first closure over the generators, deduplicated by the root
// permutation. Throws CapExceeded once more than `cap` elements appear.
std::vector<WeylElement> enumerate_group(const RootSystem& rs,
                                         std::uint64_t cap = 1000000);

// A pair (word, j) with apply_word(word) . e_j = alpha, found by descending
// the height of alpha. The word length is height(alpha) - 1.
std::pair<std::vector<int>, int> orbit_transport(const RootSystem& rs,
                                                 const Root& alpha);

}  // namespace adelink
