#include "polycut/pipeline.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <memory>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "polycut/construct.hpp"
#include "polycut/cuts.hpp"

namespace polycut {

std::string hex(std::string_view bytes) {
  static constexpr char digits[] = "0123456789abcdef";
  std::string out;
  out.reserve(2 * bytes.size());
  for (unsigned char c : bytes) {
    out.push_back(digits[c >> 4]);
    out.push_back(digits[c & 15]);
  }
  return out;
}

CorpusRecord analyze_graph(const PlanarGraph& g, const AnalyzeOptions& opts) {
  CorpusRecord r;
  r.code = hex(canonical_code(g));
  r.n = g.vertex_count();
  r.m = g.edge_count();

  // The face-sharing criterion needs a polyhedron; anything else is counted by deletion.
  const bool polyhedron = is_three_connected(g);
  CutReport report = polyhedron ? enumerate_3cuts(g) : enumerate_3cuts_brute(g);
  if (opts.oracle && polyhedron && enumerate_3cuts_brute(g).cuts != report.cuts)
    throw std::logic_error("face-sharing 3-cuts disagree with brute force for " + r.code);
  report = classify(g, std::move(report));
  r.cuts = report.count();
  r.trivial_cuts = report.trivial_count();

  const SearchOutcome cycle = find_cycle(g);
  r.hamiltonian = cycle.found;
  r.nodes_expanded = cycle.nodes_expanded;
  if (r.hamiltonian) {
    r.traceable = true;
  } else {
    const SearchOutcome path = find_path(g);
    r.traceable = path.found;
    r.nodes_expanded += path.nodes_expanded;
  }

  if (r.n <= opts.scatter_cap && r.n <= 64) {
    r.scatter = scattering_number(g, opts.scatter_cap, polyhedron ? std::optional<int>(r.cuts) : std::nullopt);
    r.one_tough = !r.scatter->value || *r.scatter->value <= 0;
  }
  return r;
}

std::string csv_header() {
  return "code,n,m,cuts,trivial_cuts,hamiltonian,traceable,one_tough,scattering,nodes_expanded";
}

namespace {

std::string scatter_field(const CorpusRecord& r) {
  if (!r.scatter) return "na";
  if (!r.scatter->value) return "undef";
  return std::to_string(*r.scatter->value);
}

std::string tough_field(const CorpusRecord& r) {
  if (!r.one_tough) return "na";
  return *r.one_tough ? "1" : "0";
}

}  // namespace

std::string to_csv(const CorpusRecord& r) {
  std::ostringstream out;
  out << r.code << ',' << r.n << ',' << r.m << ',' << r.cuts << ',' << r.trivial_cuts << ','
      << (r.hamiltonian ? 1 : 0) << ',' << (r.traceable ? 1 : 0) << ',' << tough_field(r) << ','
      << scatter_field(r) << ',' << r.nodes_expanded;
  return out.str();
}

std::string to_text(const CorpusRecord& r) {
  std::ostringstream out;
  out << "n=" << r.n << " m=" << r.m << " cuts=" << r.cuts << " trivial_cuts=" << r.trivial_cuts
      << " hamiltonian=" << (r.hamiltonian ? "yes" : "no") << " traceable=" << (r.traceable ? "yes" : "no")
      << " one_tough=" << (r.one_tough ? (*r.one_tough ? "yes" : "no") : "na")
      << " scattering=" << scatter_field(r) << " nodes=" << r.nodes_expanded << " code=" << r.code;
  return out.str();
}

PlanarGraph builtin(std::string_view name, std::optional<int> param) {
  if (name == "k4") return k4();
  if (name == "cube") return cube();
  if (name == "octahedron") return octahedron();
  if (name == "herschel") return herschel();
  if (name == "stacked-k4") return stacked_k4();
  if (name == "double-wheel") {
    if (!param) throw Error(ErrorCode::OutOfRange, "double-wheel needs a vertex count");
    return double_wheel(*param);
  }
  if (name == "non-traceable") {
    if (!param) throw Error(ErrorCode::OutOfRange, "non-traceable needs a cut count");
    return non_traceable_family(*param);
  }
  throw Error(ErrorCode::OutOfRange, "unknown construction '" + std::string(name) + "'");
}

namespace {

struct ClaimRow {
  Claim claim;
  std::string_view id;
  int cut_limit;
};

constexpr ClaimRow kClaims[] = {
    {Claim::Ham3Cuts, "ham3cuts", 3},     {Claim::Trace4Cuts, "trace4cuts", 4},
    {Claim::Ham5Cuts, "ham5cuts", 5},     {Claim::Trace7Cuts, "trace7cuts", 7},
    {Claim::Tough5Cuts, "tough5cuts", 5}, {Claim::Scat7Cuts, "scat7cuts", 7},
    {Claim::CutBound, "cutbound", std::numeric_limits<int>::max()},
};

const ClaimRow& row(Claim c) {
  for (const ClaimRow& r : kClaims)
    if (r.claim == c) return r;
  throw std::logic_error("unknown claim");
}

}  // namespace

std::string_view claim_id(Claim c) { return row(c).id; }
int claim_cut_limit(Claim c) { return row(c).cut_limit; }

std::optional<Claim> parse_claim(std::string_view id) {
  for (const ClaimRow& r : kClaims)
    if (r.id == id) return r.claim;
  return std::nullopt;
}

namespace {

struct Tally {
  std::uint64_t graphs = 0;
  std::map<int, std::uint64_t> per_n;
  std::vector<PlanarGraph> counterexamples;
  std::uint64_t searches = 0;
  std::uint64_t cache_hits = 0;
  std::uint64_t nodes = 0;

  void absorb(Tally&& o) {
    graphs += o.graphs;
    for (auto [n, c] : o.per_n) per_n[n] += c;
    for (auto& g : o.counterexamples) counterexamples.push_back(std::move(g));
    searches += o.searches;
    cache_hits += o.cache_hits;
    nodes += o.nodes;
  }
};

class ClaimChecker {
 public:
  ClaimChecker(Claim claim, const VerifyOptions& opts) : claim_(claim), opts_(opts) {}

  void operator()(ExpansionVisit& v) {
    if (!v.in_range) return;
    const PlanarGraph& g = v.graph;
    const int d = v.report.count();
    if (opts_.oracle && enumerate_3cuts_brute(g).cuts != v.report.cuts)
      throw std::logic_error("3-cut report disagrees with brute force");
    bool ok = true;
    switch (claim_) {
      case Claim::Ham3Cuts:
      case Claim::Ham5Cuts:
        ok = hamiltonian(v);
        break;
      case Claim::Trace4Cuts:
      case Claim::Trace7Cuts:
        ok = hamiltonian(v) || traceable(g);
        break;
      case Claim::Tough5Cuts:
        ok = !find_scattering_above(g, 0, 64);
        break;
      case Claim::Scat7Cuts:
        ok = !find_scattering_above(g, 1, 64);
        break;
      case Claim::CutBound:
        ok = !verify_cut_bound(g, d, 64);
        break;
    }
    ++tally.graphs;
    ++tally.per_n[g.vertex_count()];
    if (!ok) tally.counterexamples.push_back(g);
  }

  Tally tally;

 private:
  // Reuses the ancestor's cycle when the removed edge was not on it.
  bool hamiltonian(ExpansionVisit& v) {
    auto& cycles = v.chain.cycles;
    const std::size_t depth = cycles.size() - 1;
    if (opts_.use_cache && depth > 0 && cycles[depth - 1] &&
        cache_still_valid(*cycles[depth - 1], v.chain.steps.back())) {
      cycles[depth] = cycles[depth - 1];
      ++tally.cache_hits;
      if (opts_.oracle && !is_hamiltonian_cycle(v.graph, cycles[depth]->cycle()))
        throw std::logic_error("inherited cycle is not a hamiltonian cycle of the child");
      return true;
    }
    const SearchOutcome out = find_cycle(v.graph, opts_.search);
    ++tally.searches;
    tally.nodes += out.nodes_expanded;
    if (out.found) cycles[depth] = CycleCache(out.witness);
    return out.found;
  }

  bool traceable(const PlanarGraph& g) {
    const SearchOutcome out = find_path(g, opts_.search);
    ++tally.searches;
    tally.nodes += out.nodes_expanded;
    return out.found;
  }

  Claim claim_;
  const VerifyOptions& opts_;
};

}  // namespace

VerificationSummary verify_claim(Claim claim, const VerifyOptions& opts) {
  const auto started = std::chrono::steady_clock::now();
  VerificationSummary summary;
  summary.claim = std::string(claim_id(claim));
  summary.cut_lo = std::max(0, opts.cut_lo);
  summary.cut_hi = std::min(claim_cut_limit(claim), opts.cut_hi.value_or(claim_cut_limit(claim)));
  if (summary.cut_lo > summary.cut_hi) throw Error(ErrorCode::OutOfRange, "empty cut range");

  struct Task {
    int n;
    PlanarGraph seed;
  };
  std::vector<Task> tasks;
  if (!opts.seeds.empty()) {
    for (const PlanarGraph& s : opts.seeds) tasks.push_back({s.vertex_count(), s});
  } else {
    if (opts.max_n > kInternalGenerationMaxN || opts.max_n < 4 || opts.min_n > opts.max_n)
      throw Error(ErrorCode::OutOfRange, "internal generation covers 4 <= n <= 12; supply --seeds for larger n");
    for (int n = std::max(4, opts.min_n); n <= opts.max_n; ++n)
      for (PlanarGraph& t : generate_triangulations(n)) tasks.push_back({n, std::move(t)});
  }
  if (tasks.empty()) throw Error(ErrorCode::OutOfRange, "no seed graphs");
  summary.min_n = tasks.front().n;
  summary.max_n = tasks.front().n;
  std::map<int, std::unique_ptr<SeenSet>> seen;
  for (const Task& t : tasks) {
    summary.min_n = std::min(summary.min_n, t.n);
    summary.max_n = std::max(summary.max_n, t.n);
    if (!seen.count(t.n)) seen[t.n] = std::make_unique<SeenSet>();
  }

  std::atomic<std::size_t> next{0};
  std::mutex merge;
  Tally total;
  std::exception_ptr failure;
  auto worker = [&] {
    ClaimChecker checker(claim, opts);
    try {
      ExpansionOptions eo;
      eo.lo = summary.cut_lo;
      eo.hi = summary.cut_hi;
      eo.check_incremental = opts.oracle;
      const std::function<void(ExpansionVisit&)> visit = std::ref(checker);
      for (std::size_t i = next++; i < tasks.size(); i = next++) {
        eo.seen = seen[tasks[i].n].get();
        expand_polyhedra(tasks[i].seed, eo, visit);
      }
    } catch (...) {
      std::lock_guard lock(merge);
      if (!failure) failure = std::current_exception();
      next = tasks.size();
    }
    std::lock_guard lock(merge);
    total.absorb(std::move(checker.tally));
  };
  const int threads = std::max(1, opts.threads);
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int i = 0; i < threads; ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  if (failure) std::rethrow_exception(failure);

  summary.graphs_tested = total.graphs;
  summary.tested_per_n = total.per_n;
  summary.searches = total.searches;
  summary.cache_hits = total.cache_hits;
  summary.nodes_expanded = total.nodes;
  std::vector<std::pair<std::string, PlanarGraph>> cx;
  for (auto& g : total.counterexamples) cx.emplace_back(hex(canonical_code(g)), std::move(g));
  std::sort(cx.begin(), cx.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  for (auto& [code, g] : cx) {
    summary.counterexamples.push_back(code);
    summary.counterexample_graphs.push_back(std::move(g));
  }
  summary.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  return summary;
}

std::string to_text(const VerificationSummary& s) {
  std::ostringstream out;
  out << "claim " << s.claim << "  n=" << s.min_n << ".." << s.max_n << "  cuts=" << s.cut_lo << "..";
  if (s.cut_hi == std::numeric_limits<int>::max())
    out << "inf";
  else
    out << s.cut_hi;
  out << "\n  graphs tested: " << s.graphs_tested << "\n";
  for (auto [n, c] : s.tested_per_n) out << "    n=" << n << ": " << c << "\n";
  out << "  searches: " << s.searches << "  cache hits: " << s.cache_hits << "  nodes: " << s.nodes_expanded
      << "\n  counterexamples: " << s.counterexamples.size() << "\n";
  for (const auto& c : s.counterexamples) out << "    " << c << "\n";
  out << "  wall time: " << s.wall_seconds << " s\n";
  return out.str();
}

}  // namespace polycut
