#include "adelink/braid.hpp"

#include <sstream>

namespace adelink {

std::vector<std::int64_t> AbelianizationVector::coords() const {
  std::vector<std::int64_t> c(half_units.size());
  for (std::size_t k = 0; k < half_units.size(); ++k) {
    if (half_units[k] % 2 != 0)
      fail(ErrorCode::OddHalfUnits,
           "odd half-unit count at positive root index " + std::to_string(k));
    c[k] = half_units[k] / 2;
  }
  return c;
}

AbelianizationVector& AbelianizationVector::operator+=(const AbelianizationVector& o) {
  if (half_units.size() != o.half_units.size())
    fail(ErrorCode::DimensionMismatch, "abelianization vectors of different types");
  for (std::size_t k = 0; k < half_units.size(); ++k) half_units[k] += o.half_units[k];
  return *this;
}

BraidWord parse_word(const RootSystem& rs, std::string_view text) {
  BraidWord w;
  std::istringstream in{std::string(text)};
  std::string tok;
  while (in >> tok) {
    long v = 0;
    std::size_t pos = 0;
    try {
      v = std::stol(tok, &pos);
    } catch (const std::exception&) {
      fail(ErrorCode::UnparsableWord, "bad token \"" + tok + "\"");
    }
    if (pos != tok.size())
      fail(ErrorCode::UnparsableWord, "bad token \"" + tok + "\"");
    if (v == 0) fail(ErrorCode::UnparsableWord, "zero is not a generator");
    int vertex = int(v < 0 ? -v : v);
    if (vertex > rs.rank())
      fail(ErrorCode::GeneratorOutOfRange,
           "generator " + std::to_string(vertex) + " exceeds rank " + std::to_string(rs.rank()));
    w.letters.push_back({vertex, v < 0 ? -1 : +1});
  }
  return w;
}

WeylElement weyl_image(const RootSystem& rs, const BraidWord& w) {
  WeylElement u = identity_element(rs);
  for (const BraidLetter& l : w.letters)
    u = compose(rs, u, simple_reflection(rs, l.vertex));
  return u;
}

bool is_pure(const RootSystem& rs, const BraidWord& w) {
  return weyl_image(rs, w).is_identity();
}

AbelianizationVector abelianize(const RootSystem& rs, const BraidWord& w) {
  AbelianizationVector out;
  out.half_units.assign(rs.num_positive, 0);
  WeylElement prefix = identity_element(rs);
  for (const BraidLetter& l : w.letters) {
    int ei = rs.simple_index[l.vertex - 1];
    int crossed = rs.abs_index(prefix.perm[ei]);
    out.half_units[crossed] += l.exponent;
    prefix = compose(rs, prefix, simple_reflection(rs, l.vertex));
  }
  if (!prefix.is_identity()) {
    Root moved;
    for (int idx = 0; idx < rs.num_roots(); ++idx)
      if (prefix.perm[idx] != idx) {
        moved = rs.roots[idx];
        break;
      }
    std::string msg = "word is not pure; Weyl image moves root (";
    for (std::size_t i = 0; i < moved.coeffs.size(); ++i)
      msg += (i ? "," : "") + std::to_string(moved.coeffs[i]);
    fail(ErrorCode::NotPure, msg + ")");
  }
  (void)out.coords();  // asserts evenness; unreachable failure for pure words
  return out;
}

AbelianizationVector act_on_ab(const RootSystem& rs, int i,
                               const AbelianizationVector& v) {
  if (i < 1 || i > rs.rank())
    fail(ErrorCode::GeneratorOutOfRange, "vertex " + std::to_string(i));
  if (int(v.half_units.size()) != rs.num_positive)
    fail(ErrorCode::DimensionMismatch, "vector does not match the root system");
  AbelianizationVector out;
  out.half_units.assign(rs.num_positive, 0);
  for (int k = 0; k < rs.num_positive; ++k) {
    int img = rs.abs_index(rs.reflect_index(i, k));
    out.half_units[img] += v.half_units[k];
  }
  return out;
}

nlohmann::json ab_to_json(const RootSystem& rs, const AbelianizationVector& v) {
  auto coords = v.coords();
  nlohmann::json list = nlohmann::json::array();
  for (int k = 0; k < rs.num_positive; ++k)
    if (coords[k] != 0)
      list.push_back({{"root", rs.roots[k].coeffs}, {"value", coords[k]}});
  return {{"type", rs.diagram.name()}, {"coords", list}};
}

}  // namespace adelink
