#include "adelink/weyl.hpp"

#include <deque>
#include <unordered_set>

namespace adelink {

bool WeylElement::is_identity() const {
  for (int idx = 0; idx < int(perm.size()); ++idx)
    if (perm[idx] != idx) return false;
  return true;
}

WeylElement identity_element(const RootSystem& rs) {
  WeylElement w;
  w.matrix = IntMatrix::identity(rs.rank());
  w.perm.resize(rs.num_roots());
  for (int idx = 0; idx < rs.num_roots(); ++idx) w.perm[idx] = idx;
  return w;
}

WeylElement simple_reflection(const RootSystem& rs, int i) {
  if (i < 1 || i > rs.rank())
    fail(ErrorCode::GeneratorOutOfRange, "vertex " + std::to_string(i));
  WeylElement w;
  w.matrix = IntMatrix::identity(rs.rank());
  for (int j = 0; j < rs.rank(); ++j)
    w.matrix.at(i - 1, j) += rs.form.at(i - 1, j);
  w.perm.resize(rs.num_roots());
  for (int idx = 0; idx < rs.num_roots(); ++idx)
    w.perm[idx] = rs.reflect_index(i, idx);
  return w;
}

WeylElement compose(const RootSystem& rs, const WeylElement& a, const WeylElement& b) {
  (void)rs;
  WeylElement w;
  w.matrix = a.matrix * b.matrix;
  w.perm.resize(b.perm.size());
  for (int idx = 0; idx < int(b.perm.size()); ++idx) w.perm[idx] = a.perm[b.perm[idx]];
  return w;
}

WeylElement apply_word(const RootSystem& rs, std::span<const int> letters) {
  WeylElement w = identity_element(rs);
  for (int i : letters) w = compose(rs, w, simple_reflection(rs, i));
  return w;
}

std::vector<std::int64_t> apply_to_vector(const WeylElement& w,
                                          const std::vector<int>& coeffs) {
  std::vector<std::int64_t> v(coeffs.begin(), coeffs.end());
  return w.matrix * v;
}

namespace {

struct PermHash {
  std::size_t operator()(const std::vector<int>& p) const {
    std::size_t h = p.size();
    for (int x : p) h = h * 1000003u + std::size_t(x);
    return h;
  }
};

}  // namespace

std::vector<WeylElement> enumerate_group(const RootSystem& rs, std::uint64_t cap) {
  std::vector<WeylElement> gens;
  for (int i = 1; i <= rs.rank(); ++i) gens.push_back(simple_reflection(rs, i));

  std::vector<WeylElement> elements{identity_element(rs)};
  std::unordered_set<std::vector<int>, PermHash> seen{elements[0].perm};
  std::deque<std::size_t> queue{0};
  while (!queue.empty()) {
    std::size_t at = queue.front();
    queue.pop_front();
    for (const WeylElement& g : gens) {
      WeylElement next = compose(rs, elements[at], g);
      if (seen.insert(next.perm).second) {
        if (std::uint64_t(elements.size()) + 1 > cap)
          fail(ErrorCode::CapExceeded,
               "group larger than cap " + std::to_string(cap));
        elements.push_back(std::move(next));
        queue.push_back(elements.size() - 1);
      }
    }
  }
  return elements;
}

std::pair<std::vector<int>, int> orbit_transport(const RootSystem& rs, const Root& alpha) {
  int idx = rs.index_of(alpha.coeffs);
  if (idx < 0 || !rs.is_positive(idx))
    fail(ErrorCode::NotPositiveRoot, "transport of a non-positive vector");
  std::vector<int> word;
  Root cur = alpha;
  while (true) {
    int h = rs.heights[rs.index_of(cur.coeffs)];
    if (h == 1) break;
    // Some i with cur.e_i < 0 exists for a non-simple positive root, and
    // reflecting there lowers the height.
    for (int i = 1; i <= rs.rank(); ++i) {
      Root ei;
      ei.coeffs.assign(rs.rank(), 0);
      ei.coeffs[i - 1] = 1;
      if (rs.pairing(cur, ei) < 0) {
        word.push_back(i);
        cur = rs.reflect_simple(i, cur);
        break;
      }
    }
  }
  int j = 0;
  for (int i = 0; i < rs.rank(); ++i)
    if (cur.coeffs[i] == 1) j = i + 1;
  return {word, j};
}

}  // namespace adelink
