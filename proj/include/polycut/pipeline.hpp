#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "polycut/embed.hpp"
#include "polycut/hamilton.hpp"
#include "polycut/tough.hpp"

namespace polycut {

// One analysed graph. Column order of the CSV form is the field order below.
struct CorpusRecord {
  std::string code;  // canonical code, hex
  int n = 0;
  int m = 0;
  int cuts = 0;
  int trivial_cuts = 0;
  bool hamiltonian = false;
  bool traceable = false;
  std::optional<bool> one_tough;        // empty when n exceeds the scattering cap
  std::optional<ScatterResult> scatter;  // likewise
  std::uint64_t nodes_expanded = 0;
};

struct AnalyzeOptions {
  int scatter_cap = kDefaultScatterCap;
  bool oracle = false;  // cross-check the 3-cut enumeration by brute force
};

CorpusRecord analyze_graph(const PlanarGraph& g, const AnalyzeOptions& opts = {});

std::string hex(std::string_view bytes);
std::string csv_header();
std::string to_csv(const CorpusRecord& r);
std::string to_text(const CorpusRecord& r);

// Named constructions: k4, cube, octahedron, herschel, stacked-k4,
// double-wheel (param n), non-traceable (param d).
PlanarGraph builtin(std::string_view name, std::optional<int> param = std::nullopt);

enum class Claim {
  Ham3Cuts,    // at most three 3-cuts => hamiltonian
  Trace4Cuts,  // at most four 3-cuts => traceable
  Ham5Cuts,    // at most five 3-cuts => hamiltonian (open in general; checked on a range)
  Trace7Cuts,  // at most seven 3-cuts => traceable (likewise)
  Tough5Cuts,  // at most five 3-cuts => 1-tough
  Scat7Cuts,   // at most seven 3-cuts => scattering number <= 1
  CutBound,    // c(G - S) <= |S| - 2 + floor(d/2) for every splitting set S
};

std::string_view claim_id(Claim c);
std::optional<Claim> parse_claim(std::string_view id);
// Largest cut count the claim applies to (unbounded for CutBound).
int claim_cut_limit(Claim c);

inline constexpr int kInternalGenerationMaxN = 12;

struct VerifyOptions {
  int min_n = 4;
  int max_n = 8;
  int threads = 1;
  bool use_cache = true;
  bool oracle = false;
  // Narrows the claim's cut range; hi above the claim's limit is clamped.
  int cut_lo = 0;
  std::optional<int> cut_hi;
  SearchOptions search;
  // External seeds replace internal generation; they may have any n.
  std::vector<PlanarGraph> seeds;
};

struct VerificationSummary {
  std::string claim;
  int min_n = 0;
  int max_n = 0;
  int cut_lo = 0;
  int cut_hi = 0;
  std::uint64_t graphs_tested = 0;
  std::map<int, std::uint64_t> tested_per_n;
  std::vector<std::string> counterexamples;  // canonical codes (hex), sorted
  std::vector<PlanarGraph> counterexample_graphs;
  std::uint64_t searches = 0;    // cycle/path searches actually run
  std::uint64_t cache_hits = 0;  // graphs whose hamiltonicity came from the ancestor's cycle
  std::uint64_t nodes_expanded = 0;
  double wall_seconds = 0;

  bool clean() const { return counterexamples.empty(); }
};

VerificationSummary verify_claim(Claim claim, const VerifyOptions& opts);

std::string to_text(const VerificationSummary& s);

}  // namespace polycut
