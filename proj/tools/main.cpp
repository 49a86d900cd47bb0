#include <algorithm>
#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "adelink/braid.hpp"
#include "adelink/cache.hpp"
#include "adelink/reps.hpp"
#include "adelink/weyl.hpp"
#include "adelink/winding.hpp"

namespace {

using namespace adelink;

std::string format_residual(double r) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", r);
  return buf;
}

std::optional<std::string> g_cache_dir;

RootSystem load(const std::string& type) {
  return cache_roundtrip(parse_diagram(type), g_cache_dir);
}

// Dispatch table shared by `verify` and `verify-all`; an-decomp applies to
// A-family diagrams of rank at most 6 only.
VerificationReport run_lemma(const std::string& lemma, const RootSystem& rs) {
  if (lemma == "ses") return verify_ses(rs);
  if (lemma == "nonsplit") return verify_nonsplit(rs);
  if (lemma == "splitting-pab") return verify_splitting_lemma(rs, RepKind::Pab);
  if (lemma == "splitting-zphi") return verify_splitting_lemma(rs, RepKind::ZPhi);
  if (lemma == "mapfrompab") return verify_mapfrompab(rs);
  if (lemma == "an-decomp") {
    if (rs.diagram.family != Family::A)
      fail(ErrorCode::RankOutOfRange, "an-decomp requires an A-family diagram");
    return verify_an_decomposition(rs.rank());
  }
  if (lemma == "positive-simple") return verify_positive_simple(rs);
  if (lemma == "relations") return verify_relations(rs);
  fail(ErrorCode::UnparsableSpec, "unknown lemma id " + lemma);
}

const std::vector<std::string> kAllLemmas = {
    "an-decomp", "mapfrompab", "nonsplit",        "positive-simple",
    "relations", "ses",        "splitting-pab",   "splitting-zphi"};

int run(int argc, char** argv) {
  CLI::App app{"Exact ADE root-system, Weyl-representation and pure-braid "
               "abelianization toolkit"};
  app.require_subcommand(1);
  std::string cache_dir_flag;
  app.add_option("--cache-dir", cache_dir_flag, "Root-system cache directory");

  std::string type, word, lemma, cache_action;
  std::uint64_t cap = 1000000;
  OracleParams params;

  auto* c_roots = app.add_subcommand("roots", "Enumerate the root system");
  c_roots->add_option("type", type)->required();

  auto* c_order = app.add_subcommand("weyl-order", "Order of the Weyl group by BFS");
  c_order->add_option("type", type)->required();
  c_order->add_option("--cap", cap, "Enumeration cap");

  auto* c_ab = app.add_subcommand("ab", "Combinatorial abelianization of a pure word");
  c_ab->add_option("type", type)->required();
  c_ab->add_option("word", word)->required();

  auto* c_oracle = app.add_subcommand("oracle", "Numeric winding-number abelianization");
  c_oracle->add_option("type", type)->required();
  c_oracle->add_option("word", word)->required();
  c_oracle->add_option("--samples", params.samples_per_segment, "Samples per segment");
  c_oracle->add_option("--radius", params.detour_radius, "Detour radius");
  c_oracle->add_option("--tol", params.rounding_tolerance, "Rounding tolerance");

  auto* c_verify = app.add_subcommand("verify", "Run one lemma verifier");
  c_verify->add_option("lemma", lemma)->required()->check(CLI::IsMember(kAllLemmas));
  c_verify->add_option("type", type)->required();

  auto* c_all = app.add_subcommand("verify-all", "Run every applicable lemma verifier");
  c_all->add_option("type", type)->required();

  auto* c_cache = app.add_subcommand("cache", "Cache maintenance");
  c_cache->add_option("action", cache_action)
      ->required()
      ->check(CLI::IsMember({"clear", "path"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 2;
  }

  if (!cache_dir_flag.empty()) g_cache_dir = cache_dir_flag;

  try {
    if (c_roots->parsed()) {
      std::cout << root_system_to_json(load(type)).dump(2) << "\n";
      return 0;
    }
    if (c_order->parsed()) {
      RootSystem rs = load(type);
      auto group = enumerate_group(rs, cap);
      nlohmann::json out = {{"diagram", rs.diagram.name()},
                            {"order", group.size()}};
      std::cout << out.dump(2) << "\n";
      return 0;
    }
    if (c_ab->parsed()) {
      RootSystem rs = load(type);
      AbelianizationVector v = abelianize(rs, parse_word(rs, word));
      std::cout << ab_to_json(rs, v).dump(2) << "\n";
      return 0;
    }
    if (c_oracle->parsed()) {
      RootSystem rs = load(type);
      NumericLinkingResult res = numeric_linking(rs, parse_word(rs, word), params);
      nlohmann::json out = ab_to_json(rs, res.ab);
      nlohmann::json residuals = nlohmann::json::array();
      for (double r : res.residuals) residuals.push_back(format_residual(r));
      out["residuals"] = residuals;
      std::cout << out.dump(2) << "\n";
      return 0;
    }
    if (c_verify->parsed()) {
      VerificationReport rep = run_lemma(lemma, load(type));
      std::cout << rep.to_json().dump(2) << "\n";
      return rep.pass ? 0 : 1;
    }
    if (c_all->parsed()) {
      RootSystem rs = load(type);
      nlohmann::json reports = nlohmann::json::array();
      bool all_pass = true;
      for (const std::string& l : kAllLemmas) {
        if (l == "an-decomp" &&
            (rs.diagram.family != Family::A || rs.rank() > 6))
          continue;
        VerificationReport rep = run_lemma(l, rs);
        all_pass = all_pass && rep.pass;
        reports.push_back(rep.to_json());
      }
      nlohmann::json out = {{"diagram", rs.diagram.name()},
                            {"status", all_pass ? "pass" : "fail"},
                            {"reports", reports}};
      std::cout << out.dump(2) << "\n";
      return all_pass ? 0 : 1;
    }
    if (c_cache->parsed()) {
      if (cache_action == "clear") {
        cache_clear(g_cache_dir);
        std::cout << nlohmann::json{{"cleared", true}}.dump(2) << "\n";
      } else {
        std::cout << nlohmann::json{{"path", cache_directory(g_cache_dir).string()}}
                         .dump(2)
                  << "\n";
      }
      return 0;
    }
  } catch (const Error& e) {
    nlohmann::json out = {{"error", to_string(e.code())}, {"message", e.what()}};
    std::cerr << out.dump(2) << "\n";
    return is_internal(e.code()) ? 3 : 2;
  }
  return 2;
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
