#include "adelink/roots.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace adelink {

namespace {

constexpr int kClosureBudget = 10000;

int height_of(const std::vector<int>& coeffs) {
  return std::accumulate(coeffs.begin(), coeffs.end(), 0);
}

}  // namespace

int RootSystem::index_of(const std::vector<int>& coeffs) const {
  auto it = lookup.find(coeffs);
  return it == lookup.end() ? -1 : it->second;
}

std::int64_t RootSystem::pairing(const Root& a, const Root& b) const {
  if (int(a.coeffs.size()) != rank() || int(b.coeffs.size()) != rank())
    fail(ErrorCode::DimensionMismatch, "pairing of vectors of wrong rank");
  std::int64_t s = 0;
  for (int i = 0; i < rank(); ++i) {
    if (a.coeffs[i] == 0) continue;
    for (int j = 0; j < rank(); ++j)
      s += std::int64_t(a.coeffs[i]) * form.at(i, j) * b.coeffs[j];
  }
  return s;
}

Root RootSystem::reflect_simple(int i, const Root& v) const {
  if (i < 1 || i > rank())
    fail(ErrorCode::GeneratorOutOfRange, "vertex " + std::to_string(i));
  std::int64_t p = 0;
  for (int j = 0; j < rank(); ++j) p += std::int64_t(v.coeffs[j]) * form.at(i - 1, j);
  Root w = v;
  w.coeffs[i - 1] += int(p);
  return w;
}

int RootSystem::reflect_index(int i, int idx) const {
  int out = index_of(reflect_simple(i, roots[idx]).coeffs);
  if (out < 0) fail(ErrorCode::ClosureBudgetExceeded, "reflection left the root set");
  return out;
}

RootSystem enumerate_roots(const DynkinDiagram& d) {
  RootSystem rs;
  rs.diagram = d;
  rs.form = intersection_matrix(d);

  std::set<std::vector<int>> seen;
  std::vector<Root> frontier;
  for (int i = 1; i <= d.rank; ++i) {
    Root e;
    e.coeffs.assign(d.rank, 0);
    e.coeffs[i - 1] = 1;
    seen.insert(e.coeffs);
    frontier.push_back(e);
    Root neg = e;
    neg.coeffs[i - 1] = -1;
    seen.insert(neg.coeffs);
    frontier.push_back(neg);
  }

  // Breadth-first closure of {+-e_i} under the simple reflections.
  while (!frontier.empty()) {
    std::vector<Root> next;
    for (const Root& r : frontier) {
      for (int i = 1; i <= d.rank; ++i) {
        Root img = rs.reflect_simple(i, r);
        if (seen.insert(img.coeffs).second) {
          next.push_back(img);
          if (int(seen.size()) > 2 * kClosureBudget)
            fail(ErrorCode::ClosureBudgetExceeded,
                 "more than " + std::to_string(kClosureBudget) + " roots generated");
        }
      }
    }
    frontier = std::move(next);
  }

  std::vector<Root> positives;
  for (const auto& c : seen) {
    bool pos = std::all_of(c.begin(), c.end(), [](int k) { return k >= 0; });
    if (pos) positives.push_back(Root{c});
  }
  std::sort(positives.begin(), positives.end(), [](const Root& a, const Root& b) {
    int ha = height_of(a.coeffs), hb = height_of(b.coeffs);
    if (ha != hb) return ha < hb;
    return a.coeffs < b.coeffs;
  });

  rs.num_positive = int(positives.size());
  rs.roots = positives;
  for (const Root& r : positives) {
    Root neg = r;
    for (int& k : neg.coeffs) k = -k;
    rs.roots.push_back(neg);
  }
  for (int idx = 0; idx < int(rs.roots.size()); ++idx)
    rs.lookup[rs.roots[idx].coeffs] = idx;

  rs.simple_index.assign(d.rank, -1);
  rs.heights.resize(rs.num_positive);
  for (int k = 0; k < rs.num_positive; ++k) {
    rs.heights[k] = height_of(rs.roots[k].coeffs);
    if (rs.heights[k] == 1) {
      for (int i = 0; i < d.rank; ++i)
        if (rs.roots[k].coeffs[i] == 1) rs.simple_index[i] = k;
    }
  }
  return rs;
}

int height(const RootSystem& rs, const Root& alpha) {
  int idx = rs.index_of(alpha.coeffs);
  if (idx < 0 || !rs.is_positive(idx))
    fail(ErrorCode::NotPositiveRoot, "height of a non-positive vector");
  return rs.heights[idx];
}

std::int64_t pairing(const RootSystem& rs, const Root& a, const Root& b) {
  return rs.pairing(a, b);
}

std::vector<std::pair<Root, int>> decompose_positive(const RootSystem& rs,
                                                     const Root& alpha) {
  int idx = rs.index_of(alpha.coeffs);
  if (idx < 0 || !rs.is_positive(idx))
    fail(ErrorCode::NotPositiveRoot, "decomposition of a non-positive vector");
  if (rs.heights[idx] == 1)
    fail(ErrorCode::NotDecomposable, "simple roots have no decomposition");
  std::vector<std::pair<Root, int>> out;
  for (int i = 1; i <= rs.rank(); ++i) {
    Root beta = alpha;
    beta.coeffs[i - 1] -= 1;
    int bidx = rs.index_of(beta.coeffs);
    if (bidx >= 0 && rs.is_positive(bidx)) out.emplace_back(beta, i);
  }
  return out;
}

nlohmann::json root_system_to_json(const RootSystem& rs) {
  nlohmann::json roots = nlohmann::json::array();
  for (const Root& r : rs.roots) roots.push_back(r.coeffs);
  nlohmann::json positive = nlohmann::json::array();
  for (int k = 0; k < rs.num_positive; ++k) positive.push_back(k);
  return {{"diagram", diagram_to_json(rs.diagram)},
          {"roots", roots},
          {"positive", positive}};
}

RootSystem root_system_from_json(const nlohmann::json& j) {
  RootSystem rs;
  try {
    rs.diagram = parse_diagram(j.at("diagram").at("family").get<std::string>() +
                               std::to_string(j.at("diagram").at("rank").get<int>()));
    rs.form = intersection_matrix(rs.diagram);
    rs.num_positive = int(j.at("positive").size());
    for (const auto& c : j.at("roots")) rs.roots.push_back(Root{c.get<std::vector<int>>()});
  } catch (const Error&) {
    throw;
  } catch (const std::exception& e) {
    throw Error(ErrorCode::CacheCorrupt, std::string("unreadable payload: ") + e.what());
  }
  if (rs.num_roots() != 2 * rs.num_positive || rs.num_positive == 0)
    fail(ErrorCode::CacheCorrupt, "positive/negative split mismatch");

  rs.simple_index.assign(rs.rank(), -1);
  rs.heights.resize(rs.num_positive);
  for (int k = 0; k < rs.num_positive; ++k) {
    const Root& r = rs.roots[k];
    if (int(r.coeffs.size()) != rs.rank() || rs.pairing(r, r) != -2)
      fail(ErrorCode::CacheCorrupt, "stored vector is not a root");
    if (!std::all_of(r.coeffs.begin(), r.coeffs.end(), [](int c) { return c >= 0; }))
      fail(ErrorCode::CacheCorrupt, "negative coefficients in the positive block");
    const Root& neg = rs.roots[k + rs.num_positive];
    for (int i = 0; i < rs.rank(); ++i)
      if (neg.coeffs[i] != -r.coeffs[i])
        fail(ErrorCode::CacheCorrupt, "negative block is not the mirrored positive block");
    rs.heights[k] = height_of(r.coeffs);
    if (rs.heights[k] == 1)
      for (int i = 0; i < rs.rank(); ++i)
        if (r.coeffs[i] == 1) rs.simple_index[i] = k;
    if (k > 0) {
      auto key = std::make_pair(rs.heights[k - 1], rs.roots[k - 1].coeffs);
      if (std::make_pair(rs.heights[k], r.coeffs) <= key)
        fail(ErrorCode::CacheCorrupt, "canonical order violated");
    }
  }
  for (int i = 0; i < rs.rank(); ++i)
    if (rs.simple_index[i] < 0) fail(ErrorCode::CacheCorrupt, "missing simple root");
  for (int idx = 0; idx < rs.num_roots(); ++idx)
    if (!rs.lookup.emplace(rs.roots[idx].coeffs, idx).second)
      fail(ErrorCode::CacheCorrupt, "duplicate root");
  // Closure under the simple reflections; failure means a truncated payload.
  for (int idx = 0; idx < rs.num_roots(); ++idx)
    for (int i = 1; i <= rs.rank(); ++i)
      if (rs.index_of(rs.reflect_simple(i, rs.roots[idx]).coeffs) < 0)
        fail(ErrorCode::CacheCorrupt, "root set not closed under reflections");
  return rs;
}

}  // namespace adelink
