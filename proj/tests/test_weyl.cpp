#include "doctest.h"

#include "adelink/weyl.hpp"

using namespace adelink;

TEST_CASE("simple reflections are involutions preserving the form") {
  RootSystem rs = enumerate_roots(parse_diagram("D4"));
  IntMatrix id = IntMatrix::identity(rs.rank());
  for (int i = 1; i <= rs.rank(); ++i) {
    WeylElement s = simple_reflection(rs, i);
    CHECK(compose(rs, s, s) == identity_element(rs));
    CHECK(s.matrix * s.matrix == id);
    CHECK(transpose(s.matrix) * rs.form * s.matrix == rs.form);
  }
}

TEST_CASE("group orders by BFS") {
  CHECK(enumerate_group(enumerate_roots(parse_diagram("A2"))).size() == 6);
  CHECK(enumerate_group(enumerate_roots(parse_diagram("A3"))).size() == 24);
  CHECK(enumerate_group(enumerate_roots(parse_diagram("D4"))).size() == 192);
  // |W(A_n)| = (n+1)!
  CHECK(enumerate_group(enumerate_roots(parse_diagram("A4"))).size() == 120);
  CHECK(enumerate_group(enumerate_roots(parse_diagram("A5"))).size() == 720);
}

TEST_CASE("cap exceeded") {
  RootSystem rs = enumerate_roots(parse_diagram("A3"));
  CHECK_THROWS_AS(enumerate_group(rs, 10), Error);
  try {
    enumerate_group(rs, 10);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::CapExceeded);
  }
}

TEST_CASE("apply_word composition order: rightmost acts first") {
  RootSystem rs = enumerate_roots(parse_diagram("A2"));
  std::vector<int> word{1, 2};
  WeylElement w = apply_word(rs, word);
  // (s1 o s2)(e2) = s1(s2(e2)) = s1(-e2) = -(e1 + e2)... check via matrices.
  WeylElement s1 = simple_reflection(rs, 1), s2 = simple_reflection(rs, 2);
  CHECK(w == compose(rs, s1, s2));
  std::vector<std::int64_t> img = apply_to_vector(w, {0, 1});
  CHECK(img == std::vector<std::int64_t>{-1, -1});
}

TEST_CASE("matrix and permutation views stay in sync") {
  RootSystem rs = enumerate_roots(parse_diagram("A3"));
  for (const WeylElement& w : enumerate_group(rs))
    for (int k = 0; k < rs.num_roots(); ++k) {
      auto img = apply_to_vector(w, rs.roots[k].coeffs);
      std::vector<int> v(img.begin(), img.end());
      CHECK(rs.index_of(v) == w.perm[k]);
    }
}

TEST_CASE("orbit transport reaches every positive root") {
  for (const char* name : {"A3", "D4", "E6"}) {
    RootSystem rs = enumerate_roots(parse_diagram(name));
    for (int k = 0; k < rs.num_positive; ++k) {
      auto [word, j] = orbit_transport(rs, rs.roots[k]);
      CHECK(int(word.size()) == rs.heights[k] - 1);
      WeylElement w = apply_word(rs, word);
      std::vector<int> ej(rs.rank(), 0);
      ej[j - 1] = 1;
      auto img = apply_to_vector(w, ej);
      std::vector<int> v(img.begin(), img.end());
      CHECK(v == rs.roots[k].coeffs);
    }
  }
}
