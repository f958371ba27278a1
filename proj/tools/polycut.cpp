#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <limits>
#include <string>
#include <vector>

#include "polycut/construct.hpp"
#include "polycut/pipeline.hpp"
#include "polycut/planar_code.hpp"

namespace {

using namespace polycut;

constexpr int kExitClean = 0;
constexpr int kExitCounterexample = 1;
constexpr int kExitUsage = 2;

std::pair<int, int> parse_range(const std::string& s) {
  const auto colon = s.find(':');
  if (colon == std::string::npos) {
    const int v = std::stoi(s);
    return {v, v};
  }
  const std::string lo = s.substr(0, colon), hi = s.substr(colon + 1);
  return {lo.empty() ? 0 : std::stoi(lo), hi.empty() ? std::numeric_limits<int>::max() : std::stoi(hi)};
}

std::vector<PlanarGraph> read_input(const std::string& path) {
  if (path == "-") return read_planar_code(std::cin);
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::BadHeader, "cannot open " + path);
  return read_planar_code(in);
}

// "name" or "name:param"
PlanarGraph parse_builtin(const std::string& arg) {
  const auto colon = arg.find(':');
  if (colon == std::string::npos) return builtin(arg);
  return builtin(arg.substr(0, colon), std::stoi(arg.substr(colon + 1)));
}

void write_output(const std::string& path, const std::vector<PlanarGraph>& graphs) {
  if (path.empty() || path == "-") {
    write_planar_code(std::cout, graphs);
    std::cout.flush();
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::OutOfRange, "cannot write " + path);
  write_planar_code(out, graphs);
}

int default_threads() {
  if (const char* env = std::getenv("POLYCUT_THREADS")) {
    const int t = std::atoi(env);
    if (t > 0) return t;
  }
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"polycut: 3-cuts, hamiltonicity and toughness of polyhedra"};
  app.require_subcommand(1);

  // analyze
  auto* analyze = app.add_subcommand("analyze", "report cuts, hamiltonicity and toughness per graph");
  std::string analyze_input;
  std::vector<std::string> analyze_builtins;
  std::string format = "csv";
  bool sort = false, analyze_oracle = false;
  int scatter_cap = kDefaultScatterCap;
  std::string analyze_cuts;
  analyze->add_option("input", analyze_input, "planar_code file, or - for stdin");
  analyze->add_option("--builtin", analyze_builtins, "named construction, NAME or NAME:PARAM");
  analyze->add_option("--format", format, "csv or text")->check(CLI::IsMember({"csv", "text"}));
  analyze->add_flag("--sort", sort, "order records by canonical code");
  analyze->add_flag("--oracle", analyze_oracle, "cross-check 3-cuts by brute force");
  analyze->add_option("--scatter-cap", scatter_cap, "largest n for subset enumeration");
  analyze->add_option("--cuts", analyze_cuts, "only report graphs with lo:hi 3-cuts");

  // verify
  auto* verify = app.add_subcommand("verify", "check a claim over all polyhedra in a range");
  std::string claim_name;
  VerifyOptions vopts;
  vopts.threads = default_threads();
  std::string seeds_path, verify_cuts, dump_path;
  bool no_cache = false;
  verify->add_option("claim", claim_name, "ham3cuts, trace4cuts, ham5cuts, trace7cuts, tough5cuts, scat7cuts, cutbound")
      ->required();
  verify->add_option("--min-n", vopts.min_n, "smallest vertex count");
  verify->add_option("--max-n", vopts.max_n, "largest vertex count (internal generation stops at 12)");
  verify->add_option("--seeds", seeds_path, "planar_code file of seed triangulations");
  verify->add_option("--threads", vopts.threads, "worker threads (default POLYCUT_THREADS or 1)");
  verify->add_option("--cuts", verify_cuts, "restrict to lo:hi 3-cuts");
  verify->add_option("--counterexamples", dump_path, "planar_code file for counterexamples (default stdout)");
  verify->add_flag("--no-cache", no_cache, "disable the inherited cycle cache");
  verify->add_flag("--oracle", vopts.oracle, "cross-check every 3-cut count by brute force");

  // construct
  auto* construct = app.add_subcommand("construct", "emit a named construction as planar_code");
  std::string construct_name, construct_out;
  std::optional<int> construct_param;
  construct->add_option("name", construct_name,
                        "k4, cube, octahedron, herschel, stacked-k4, double-wheel, non-traceable")
      ->required();
  construct->add_option("param", construct_param, "vertex count (double-wheel) or cut count (non-traceable)");
  construct->add_option("-o,--output", construct_out, "output file (default stdout)");

  // generate
  auto* generate = app.add_subcommand("generate", "emit all polyhedra on n vertices as planar_code");
  int gen_n = 0;
  std::string gen_cuts, gen_out;
  bool triangulations_only = false;
  generate->add_option("--n", gen_n, "vertex count, 4..12")->required();
  generate->add_option("--cuts", gen_cuts, "restrict to lo:hi 3-cuts");
  generate->add_flag("--triangulations", triangulations_only, "triangulations only");
  generate->add_option("-o,--output", gen_out, "output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitClean : kExitUsage;
  }

  try {
    if (*analyze) {
      std::vector<PlanarGraph> graphs;
      if (!analyze_input.empty()) graphs = read_input(analyze_input);
      for (const auto& b : analyze_builtins) graphs.push_back(parse_builtin(b));
      if (graphs.empty()) {
        std::cerr << "analyze: no input graphs\n";
        return kExitUsage;
      }
      const auto [lo, hi] = analyze_cuts.empty() ? std::pair{0, std::numeric_limits<int>::max()}
                                                 : parse_range(analyze_cuts);
      std::vector<CorpusRecord> records;
      for (const auto& g : graphs) {
        CorpusRecord r = analyze_graph(g, {scatter_cap, analyze_oracle});
        if (r.cuts >= lo && r.cuts <= hi) records.push_back(std::move(r));
      }
      if (sort)
        std::stable_sort(records.begin(), records.end(),
                         [](const CorpusRecord& a, const CorpusRecord& b) { return a.code < b.code; });
      if (format == "csv") std::cout << csv_header() << "\n";
      for (const auto& r : records) std::cout << (format == "csv" ? to_csv(r) : to_text(r)) << "\n";
      return kExitClean;
    }

    if (*verify) {
      const auto claim = parse_claim(claim_name);
      if (!claim) {
        std::cerr << "verify: unknown claim '" << claim_name << "'\n";
        return kExitUsage;
      }
      vopts.use_cache = !no_cache;
      if (!verify_cuts.empty()) {
        const auto [lo, hi] = parse_range(verify_cuts);
        vopts.cut_lo = lo;
        vopts.cut_hi = hi;
      }
      if (!seeds_path.empty()) vopts.seeds = read_input(seeds_path);
      const VerificationSummary s = verify_claim(*claim, vopts);
      std::cerr << to_text(s);
      if (!s.clean()) {
        write_output(dump_path, s.counterexample_graphs);
        std::cerr << "FAILED: " << s.counterexamples.size() << " counterexample(s)\n";
        return kExitCounterexample;
      }
      return kExitClean;
    }

    if (*construct) {
      write_output(construct_out, {builtin(construct_name, construct_param)});
      return kExitClean;
    }

    if (*generate) {
      if (gen_n < 4 || gen_n > kInternalGenerationMaxN) {
        std::cerr << "generate: --n must be in 4.." << kInternalGenerationMaxN << "\n";
        return kExitUsage;
      }
      const auto [lo, hi] = gen_cuts.empty() ? std::pair{0, std::numeric_limits<int>::max()} : parse_range(gen_cuts);
      std::vector<PlanarGraph> out;
      SeenSet seen;
      for (const PlanarGraph& t : generate_triangulations(gen_n)) {
        if (triangulations_only) {
          const int d = enumerate_3cuts(t).count();
          if (d >= lo && d <= hi) out.push_back(t);
          continue;
        }
        for (auto& [g, report] : expand_polyhedra(t, lo, hi, &seen)) out.push_back(std::move(g));
      }
      write_output(gen_out, out);
      std::cerr << out.size() << " graphs\n";
      return kExitClean;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: bad number: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: number out of range: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
