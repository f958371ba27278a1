#pragma once

#include <functional>
#include <limits>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "polycut/cuts.hpp"
#include "polycut/embed.hpp"
#include "polycut/hamilton.hpp"

namespace polycut {

// Fixtures.
PlanarGraph k4();
PlanarGraph cube();
PlanarGraph octahedron();
// Smallest non-hamiltonian polyhedron: 11 vertices, 18 edges, bipartite.
PlanarGraph herschel();
// K4 with one vertex stacked into a face: the 5-vertex triangulation.
PlanarGraph stacked_k4();

// Cycle 0..n-3 with apexes n-2 and n-1 joined to every cycle vertex.
PlanarGraph double_wheel(int n);

// Inserts a degree-3 vertex into the triangular face f.
PlanarGraph stack_vertex(const PlanarGraph& t, const Face& f);

// Double wheel with d faces, every face stacked: 3d/2 + 2 vertices, exactly d
// 3-cuts, not traceable. d must be even and at least 8.
PlanarGraph non_traceable_family(int d);

struct LiftResult {
  PlanarGraph graph;                 // 4-connected polyhedron (or the input when it has no 3-cuts)
  VertexSet added;                   // apex vertices, indices >= input n
  std::vector<Edge> deleted_edges;   // separating-triangle edges removed along the way
  std::vector<int> cut_counts;       // 3-cut count before each step and after the last
};

// Repeatedly picks a 3-cut {u,v,w} (deleting edge uv first if the cut is a
// separating triangle) and puts a new vertex into the face shared by u and v,
// joined to its whole boundary. Each step lowers the number of 3-cuts.
LiftResult lift_to_4connected(const PlanarGraph& g);

// Every triangulation on n vertices (4 <= n <= 12), one per isomorphism class,
// in order of canonical code.
std::vector<PlanarGraph> generate_triangulations(int n);

// Thread-safe insert-if-absent set of canonical codes.
class SeenSet {
 public:
  // True if the code was not present before.
  bool insert(std::string code);
  std::size_t size() const;

 private:
  static constexpr std::size_t kShards = 64;
  struct Shard {
    mutable std::mutex mutex;
    std::unordered_set<std::string> codes;
  };
  std::array<Shard, kShards> shards_;
};

// The edge-removal path from a seed triangulation to the current graph.
struct GenerationChain {
  PlanarGraph root;
  std::vector<Edge> steps;
  std::vector<int> cut_counts;                    // [0] is the root
  std::vector<std::optional<CycleCache>> cycles;  // per depth; back() belongs to the current graph
};

struct ExpansionVisit {
  const PlanarGraph& graph;
  const CutReport& report;  // unclassified
  GenerationChain& chain;
  bool in_range;  // lo <= cut count <= hi
};

struct ExpansionOptions {
  int lo = 0;
  int hi = std::numeric_limits<int>::max();
  SeenSet* seen = nullptr;         // shared across seeds; a private set is used when null
  bool check_incremental = false;  // compare every incremental recount with a full one
};

// Visits every 3-connected spanning subgraph of `seed` reachable by deleting
// edges one at a time while staying 3-connected, once per isomorphism class
// (per `seen`). Subtrees are cut when the 3-cut count exceeds hi. The visitor
// sees every visited graph; in_range tells whether it should be emitted.
void expand_polyhedra(const PlanarGraph& seed, const ExpansionOptions& opts,
                      const std::function<void(ExpansionVisit&)>& visit);

// Emitted graphs only, with their (unclassified) reports.
std::vector<std::pair<PlanarGraph, CutReport>> expand_polyhedra(const PlanarGraph& seed, int lo, int hi,
                                                                SeenSet* seen = nullptr);

}  // namespace polycut
