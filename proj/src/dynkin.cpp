#include "adelink/dynkin.hpp"

#include <algorithm>
#include <cctype>

namespace adelink {

char family_letter(Family f) {
  switch (f) {
    case Family::A: return 'A';
    case Family::D: return 'D';
    case Family::E: return 'E';
  }
  return '?';
}

bool DynkinDiagram::adjacent(int i, int j) const {
  if (i > j) std::swap(i, j);
  return std::binary_search(edges.begin(), edges.end(), std::make_pair(i, j));
}

std::string DynkinDiagram::name() const {
  return family_letter(family) + std::to_string(rank);
}

namespace {

std::vector<std::pair<int, int>> bourbaki_edges(Family f, int n) {
  std::vector<std::pair<int, int>> e;
  switch (f) {
    case Family::A:
      for (int i = 1; i < n; ++i) e.emplace_back(i, i + 1);
      break;
    case Family::D:
      for (int i = 1; i < n - 2; ++i) e.emplace_back(i, i + 1);
      e.emplace_back(n - 2, n - 1);
      e.emplace_back(n - 2, n);
      break;
    case Family::E:
      e.emplace_back(1, 3);
      e.emplace_back(2, 4);
      for (int i = 3; i < n; ++i) e.emplace_back(i, i + 1);
      break;
  }
  std::sort(e.begin(), e.end());
  return e;
}

}  // namespace

DynkinDiagram parse_diagram(std::string_view spec) {
  if (spec.size() < 2)
    fail(ErrorCode::UnparsableSpec, "expected [ADE][0-9]+, got \"" + std::string(spec) + "\"");
  char letter = spec[0];
  Family family;
  switch (letter) {
    case 'A': family = Family::A; break;
    case 'D': family = Family::D; break;
    case 'E': family = Family::E; break;
    default:
      fail(ErrorCode::UnparsableSpec, "family must be A, D or E in \"" + std::string(spec) + "\"");
  }
  long rank = 0;
  for (std::size_t k = 1; k < spec.size(); ++k) {
    if (!std::isdigit(static_cast<unsigned char>(spec[k])))
      fail(ErrorCode::UnparsableSpec, "rank must be numeric in \"" + std::string(spec) + "\"");
    rank = rank * 10 + (spec[k] - '0');
    if (rank > 1000) fail(ErrorCode::InvalidRank, "rank out of range in \"" + std::string(spec) + "\"");
  }
  bool ok = (family == Family::A && rank >= 1) ||
            (family == Family::D && rank >= 4) ||
            (family == Family::E && rank >= 6 && rank <= 8);
  if (!ok)
    fail(ErrorCode::InvalidRank, "no ADE diagram named \"" + std::string(spec) + "\"");
  return DynkinDiagram{family, int(rank), bourbaki_edges(family, int(rank))};
}

IntMatrix intersection_matrix(const DynkinDiagram& d) {
  IntMatrix q(d.rank, d.rank);
  for (int i = 0; i < d.rank; ++i) q.at(i, i) = -2;
  for (auto [i, j] : d.edges) {
    q.at(i - 1, j - 1) = 1;
    q.at(j - 1, i - 1) = 1;
  }
  return q;
}

nlohmann::json diagram_to_json(const DynkinDiagram& d) {
  nlohmann::json edges = nlohmann::json::array();
  for (auto [i, j] : d.edges) edges.push_back({i, j});
  return {{"family", std::string(1, family_letter(d.family))},
          {"rank", d.rank},
          {"edges", edges}};
}

}  // namespace adelink
