#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

#include "polycut/construct.hpp"

namespace polycut {

bool SeenSet::insert(std::string code) {
  Shard& shard = shards_[std::hash<std::string>{}(code) % kShards];
  std::lock_guard lock(shard.mutex);
  return shard.codes.insert(std::move(code)).second;
}

std::size_t SeenSet::size() const {
  std::size_t total = 0;
  for (const Shard& shard : shards_) {
    std::lock_guard lock(shard.mutex);
    total += shard.codes.size();
  }
  return total;
}

namespace {

// Splits v into v and a new vertex, both joined to a and b (neighbours of v at
// rotation positions i < j) and to each other. v keeps the arc from a to b,
// the new vertex takes the arc from b back to a. Inverse of contracting an
// edge whose two flanking triangles have apexes a and b.
PlanarGraph split_vertex(const PlanarGraph& t, Vertex v, int i, int j) {
  const int n = t.vertex_count();
  const Vertex fresh = n;
  const auto rv = t.rotation(v);
  const int deg = static_cast<int>(rv.size());
  const Vertex a = rv[i], b = rv[j];

  auto rot = t.rotations();
  std::vector<Vertex> keep, moved;
  for (int p = i; p != j; p = (p + 1) % deg) keep.push_back(rv[p]);
  keep.push_back(b);
  keep.push_back(fresh);
  for (int p = j; p != i; p = (p + 1) % deg) moved.push_back(rv[p]);
  moved.push_back(a);
  moved.push_back(v);
  for (std::size_t p = 1; p + 2 < moved.size(); ++p) std::replace(rot[moved[p]].begin(), rot[moved[p]].end(), v, fresh);

  auto& ra = rot[a];
  ra.insert(std::find(ra.begin(), ra.end(), v) + 1, fresh);
  auto& rb = rot[b];
  rb.insert(std::find(rb.begin(), rb.end(), v), fresh);
  rot[v] = std::move(keep);
  rot.push_back(std::move(moved));
  return PlanarGraph::build(rot);
}

}  // namespace

std::vector<PlanarGraph> generate_triangulations(int n) {
  if (n < 4 || n > 12) throw Error(ErrorCode::OutOfRange, "triangulation generation supports 4 <= n <= 12");
  std::map<std::string, PlanarGraph> level{{canonical_code(k4()), k4()}};
  for (int size = 5; size <= n; ++size) {
    std::map<std::string, PlanarGraph> next;
    for (const auto& [code, t] : level) {
      for (Vertex v = 0; v < t.vertex_count(); ++v) {
        const int deg = t.degree(v);
        for (int i = 0; i < deg; ++i)
          for (int j = i + 1; j < deg; ++j) {
            PlanarGraph s = split_vertex(t, v, i, j);
            std::string c = canonical_code(s);
            next.try_emplace(std::move(c), std::move(s));
          }
      }
    }
    level = std::move(next);
  }
  std::vector<PlanarGraph> out;
  out.reserve(level.size());
  for (auto& [code, t] : level) out.push_back(std::move(t));
  return out;
}

namespace {

class Expander {
 public:
  Expander(const ExpansionOptions& opts, SeenSet& seen, const std::function<void(ExpansionVisit&)>& visit)
      : opts_(opts), seen_(seen), visit_(visit) {}

  void run(const PlanarGraph& seed) {
    if (!seen_.insert(canonical_code(seed))) return;
    const CofacialState st = cofacial_build(seed);
    const CutReport report = enumerate_3cuts(seed, st);
    if (report.count() > opts_.hi) return;
    chain_.root = seed;
    chain_.steps.clear();
    chain_.cut_counts.assign(1, report.count());
    chain_.cycles.assign(1, std::nullopt);
    descend(seed, st, report);
  }

 private:
  void descend(const PlanarGraph& g, const CofacialState& st, const CutReport& report) {
    ExpansionVisit here{g, report, chain_, report.count() >= opts_.lo && report.count() <= opts_.hi};
    visit_(here);

    for (const Edge& e : g.edges()) {
      if (g.degree(e.u) <= 3 || g.degree(e.v) <= 3) continue;
      std::vector<Triple> reappeared;
      CutReport child_report = incremental_recount(st, g, e, report, &reappeared);
      if (child_report.count() > opts_.hi) continue;
      if (!three_connected_without_edge(g, e.u, e.v)) continue;
      if (!reappeared.empty()) throw std::logic_error("a prior 3-cut was produced again by the incremental rule");
      PlanarGraph child = remove_edge(g, e.u, e.v);
      if (!seen_.insert(canonical_code(child))) continue;
      if (opts_.check_incremental) {
        const CutReport full = enumerate_3cuts(child);
        if (full.cuts != child_report.cuts) throw std::logic_error("incremental 3-cut count disagrees with full recount");
      }
      CofacialState child_state = st;
      child_state.merge_face(merged_face(g, e));

      chain_.steps.push_back(e);
      chain_.cut_counts.push_back(child_report.count());
      chain_.cycles.emplace_back();
      descend(child, child_state, child_report);
      chain_.cycles.pop_back();
      chain_.cut_counts.pop_back();
      chain_.steps.pop_back();
    }
  }

  const ExpansionOptions& opts_;
  SeenSet& seen_;
  const std::function<void(ExpansionVisit&)>& visit_;
  GenerationChain chain_;
};

}  // namespace

void expand_polyhedra(const PlanarGraph& seed, const ExpansionOptions& opts,
                      const std::function<void(ExpansionVisit&)>& visit) {
  SeenSet local;
  Expander(opts, opts.seen ? *opts.seen : local, visit).run(seed);
}

std::vector<std::pair<PlanarGraph, CutReport>> expand_polyhedra(const PlanarGraph& seed, int lo, int hi,
                                                                SeenSet* seen) {
  std::vector<std::pair<PlanarGraph, CutReport>> out;
  ExpansionOptions opts;
  opts.lo = lo;
  opts.hi = hi;
  opts.seen = seen;
  expand_polyhedra(seed, opts, [&](ExpansionVisit& v) {
    if (v.in_range) out.emplace_back(v.graph, v.report);
  });
  return out;
}

}  // namespace polycut
