#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "adelink/dynkin.hpp"

namespace adelink {

// A lattice vector in the simple-root basis; coeffs[k] is the coefficient
// of e_{k+1}.
struct Root {
  std::vector<int> coeffs;

  bool operator==(const Root& o) const = default;
  auto operator<=>(const Root& o) const = default;
};

// The root system Phi = {a : a.a = -2}, enumerated by reflection-orbit
// closure from the simple roots. Canonical order: positive roots sorted by
// (height, then coefficient vector lexicographically); the negative of the
// positive root at index k sits at index num_positive + k.
struct RootSystem {
  DynkinDiagram diagram;
  IntMatrix form;
  std::vector<Root> roots;
  int num_positive = 0;
  std::vector<int> simple_index;        // simple_index[i-1] = index of e_i
  std::vector<int> heights;             // heights[k] for positive index k
  std::map<std::vector<int>, int> lookup;

  int rank() const { return diagram.rank; }
  int num_roots() const { return int(roots.size()); }
  bool is_positive(int idx) const { return idx < num_positive; }
  int negate_index(int idx) const {
    return idx < num_positive ? idx + num_positive : idx - num_positive;
  }
  // Index of the positive representative of the root at idx.
  int abs_index(int idx) const { return idx < num_positive ? idx : idx - num_positive; }

  // Index in `roots` of the given coefficient vector, or -1.
  int index_of(const std::vector<int>& coeffs) const;

  std::int64_t pairing(const Root& a, const Root& b) const;

  // s_i . v = v + (v.e_i) e_i, on an arbitrary lattice vector.
  Root reflect_simple(int i, const Root& v) const;

  // Image of root index idx under s_i (index form).
  int reflect_index(int i, int idx) const;
};

RootSystem enumerate_roots(const DynkinDiagram& d);

int height(const RootSystem& rs, const Root& alpha);

std::int64_t pairing(const RootSystem& rs, const Root& a, const Root& b);

// All pairs (beta, i) with alpha = beta + e_i and beta a positive root.
// Every returned pair satisfies s_i . alpha = beta.
std::vector<std::pair<Root, int>> decompose_positive(const RootSystem& rs,
                                                     const Root& alpha);

nlohmann::json root_system_to_json(const RootSystem& rs);

// Inverse of root_system_to_json; validates invariants and the canonical
// order, throwing CacheCorrupt on any mismatch.
RootSystem root_system_from_json(const nlohmann::json& j);

}  // namespace adelink
