#pragma once

#include <string_view>
#include <vector>

#include "adelink/weyl.hpp"

namespace adelink {

struct BraidLetter {
  int vertex;    // in 1..rank
  int exponent;  // +1 or -1

  bool operator==(const BraidLetter& o) const = default;
};

struct BraidWord {
  std::vector<BraidLetter> letters;
};

// Element of the abelianized pure braid group, stored as signed half-turn
// counts per positive root. The exposed coordinates exist only when every
// count is even, which holds exactly for pure words.
struct AbelianizationVector {
  std::vector<std::int64_t> half_units;  // indexed by positive root index

  std::vector<std::int64_t> coords() const;  // half_units / 2
  bool operator==(const AbelianizationVector& o) const = default;

  AbelianizationVector& operator+=(const AbelianizationVector& o);
};

// Grammar: whitespace-separated nonzero signed integers; "1 2 -1" reads
// s_1 s_2 s_1^{-1}.
BraidWord parse_word(const RootSystem& rs, std::string_view text);

WeylElement weyl_image(const RootSystem& rs, const BraidWord& w);

bool is_pure(const RootSystem& rs, const BraidWord& w);

// Wall-crossing abelianization P -> direct sum of Z over the positive
// roots: the letter with prefix image u in W and generator i crosses the
// single hyperplane H(|u . e_i|), contributing one signed half-turn.
// Normalized so that abelianize("i i") = t_{e_i}.
AbelianizationVector abelianize(const RootSystem& rs, const BraidWord& w);

// Action of s_i on coordinates: t_alpha -> t_{|s_i . alpha|}.
AbelianizationVector act_on_ab(const RootSystem& rs, int i,
                               const AbelianizationVector& v);

// {type, coords: [{root, value}, ...]}, nonzero coordinates in canonical
// root order.
nlohmann::json ab_to_json(const RootSystem& rs, const AbelianizationVector& v);

}  // namespace adelink
