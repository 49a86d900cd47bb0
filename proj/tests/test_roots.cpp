#include "doctest.h"

#include <map>

#include "adelink/roots.hpp"

using namespace adelink;

namespace {

// Independent oracle: count lattice vectors v with v.v = -2 by brute-force
// box enumeration over |k_i| <= 6. For rank <= 8 ADE systems every root
// coefficient lies well inside that box.
int box_count(const RootSystem& rs) {
  const int n = rs.rank();
  std::vector<int> v(n, -6);
  int count = 0;
  while (true) {
    std::int64_t q = 0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) q += std::int64_t(v[i]) * rs.form.at(i, j) * v[j];
    if (q == -2) ++count;
    int k = 0;
    while (k < n && v[k] == 6) v[k++] = -6;
    if (k == n) break;
    ++v[k];
  }
  return count;
}

}  // namespace

TEST_CASE("root counts match the closed-form values") {
  std::map<std::string, int> expected{{"A1", 2},  {"A2", 6},   {"A3", 12}, {"D4", 24},
                                      {"E6", 72}, {"E7", 126}, {"E8", 240}};
  for (const auto& [name, count] : expected) {
    RootSystem rs = enumerate_roots(parse_diagram(name));
    CHECK(rs.num_roots() == count);
    CHECK(rs.num_positive * 2 == count);
  }
}

TEST_CASE("orbit closure agrees with box enumeration") {
  for (const char* name : {"A1", "A2", "A3", "A4", "D4", "D5"}) {
    RootSystem rs = enumerate_roots(parse_diagram(name));
    CHECK(box_count(rs) == rs.num_roots());
  }
}

TEST_CASE("canonical order and index helpers") {
  RootSystem rs = enumerate_roots(parse_diagram("D4"));
  for (int k = 1; k < rs.num_positive; ++k)
    CHECK(rs.heights[k - 1] <= rs.heights[k]);
  for (int k = 0; k < rs.num_positive; ++k) {
    Root neg = rs.roots[k + rs.num_positive];
    for (int i = 0; i < rs.rank(); ++i)
      CHECK(neg.coeffs[i] == -rs.roots[k].coeffs[i]);
    CHECK(rs.negate_index(k) == k + rs.num_positive);
    CHECK(rs.abs_index(k + rs.num_positive) == k);
    CHECK(rs.is_positive(k));
    CHECK_FALSE(rs.is_positive(k + rs.num_positive));
  }
  for (int i = 1; i <= rs.rank(); ++i)
    CHECK(rs.heights[rs.simple_index[i - 1]] == 1);

  // Highest root of D4 is e1 + 2 e2 + e3 + e4 (vertex 2 is the center).
  CHECK(rs.roots[rs.num_positive - 1].coeffs == std::vector<int>{1, 2, 1, 1});
}

TEST_CASE("E8 highest root has height 29") {
  RootSystem rs = enumerate_roots(parse_diagram("E8"));
  CHECK(rs.heights[rs.num_positive - 1] == 29);
}

TEST_CASE("pairing and reflections") {
  RootSystem rs = enumerate_roots(parse_diagram("A2"));
  for (const Root& a : rs.roots) CHECK(rs.pairing(a, a) == -2);
  Root e1{{1, 0}}, e2{{0, 1}};
  CHECK(rs.pairing(e1, e2) == 1);
  CHECK(rs.reflect_simple(1, e1) == Root{{-1, 0}});
  CHECK(rs.reflect_simple(1, e2) == Root{{1, 1}});
  for (int i = 1; i <= rs.rank(); ++i)
    for (int k = 0; k < rs.num_roots(); ++k)
      CHECK(rs.reflect_index(i, rs.reflect_index(i, k)) == k);
}

TEST_CASE("decompose_positive") {
  RootSystem rs = enumerate_roots(parse_diagram("A2"));
  Root high{{1, 1}};
  auto decs = decompose_positive(rs, high);
  REQUIRE(decs.size() == 2);
  for (const auto& [beta, i] : decs) {
    Root sum = beta;
    sum.coeffs[i - 1] += 1;
    CHECK(sum == high);
    CHECK(rs.reflect_simple(i, high) == beta);
  }
  try {
    decompose_positive(rs, Root{{1, 0}});
    FAIL("expected NotDecomposable");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotDecomposable);
  }
  try {
    decompose_positive(rs, Root{{-1, 0}});
    FAIL("expected NotPositiveRoot");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotPositiveRoot);
  }
}

TEST_CASE("json round trip and corruption detection") {
  RootSystem rs = enumerate_roots(parse_diagram("A3"));
  nlohmann::json j = root_system_to_json(rs);
  CHECK(j["diagram"]["rank"] == 3);
  CHECK(j["roots"].size() == 12);

  RootSystem back = root_system_from_json(j);
  CHECK(back.roots == rs.roots);
  CHECK(back.num_positive == rs.num_positive);
  CHECK(root_system_to_json(back).dump() == j.dump());

  nlohmann::json bad = j;
  bad["roots"][0][0] = 5;
  CHECK_THROWS_AS(root_system_from_json(bad), Error);
  nlohmann::json swapped = j;
  std::swap(swapped["roots"][0], swapped["roots"][1]);
  CHECK_THROWS_AS(root_system_from_json(swapped), Error);
}
