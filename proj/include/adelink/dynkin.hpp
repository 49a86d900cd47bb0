#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "adelink/intmat.hpp"

#include "json.hpp"

namespace adelink {

enum class Family { A, D, E };

char family_letter(Family f);

// Simply-laced Dynkin diagram with Bourbaki vertex numbering:
//   A_n: path 1-2-...-n
//   D_n: path 1-...-(n-2), with n-1 and n both adjacent to n-2
//   E_n: path 1-3-4-...-n, with 2 adjacent to 4
// Vertices are 1-based throughout the public surface.
struct DynkinDiagram {
  Family family;
  int rank;
  std::vector<std::pair<int, int>> edges;  // i < j, sorted

  bool adjacent(int i, int j) const;
  std::string name() const;  // canonical spec string, e.g. "E8"
};

// Parses a spec string matching [ADE][0-9]+ and validates the rank
// constraints (A: n>=1, D: n>=4, E: n in {6,7,8}).
DynkinDiagram parse_diagram(std::string_view spec);

// The pairing matrix of eq. e_i.e_i = -2, e_i.e_j = 1 for adjacent, 0 else.
IntMatrix intersection_matrix(const DynkinDiagram& d);

nlohmann::json diagram_to_json(const DynkinDiagram& d);

}  // namespace adelink
