#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "polycut/embed.hpp"

namespace polycut {

// The two look-aheads of the search. Disabling one never changes the answer,
// only the amount of work.
//
// Cycle search (path from start s to end e, unvisited set U):
//   first:  U is nonempty and s has no neighbour in U.
//   second: some x in U has fewer than two neighbours in U + {s, e}.
// Path search (S = U + {e}, start vertex excluded unless it is the end):
//   first:  some x in U has no neighbour in S.
//   second: at least two x in U have fewer than two neighbours in S.
struct SearchOptions {
  bool first_rule = true;
  bool second_rule = true;
};

struct SearchOutcome {
  bool found = false;
  std::vector<Vertex> witness;  // cycle (closing edge implied) or path
  std::uint64_t nodes_expanded = 0;
  std::array<std::uint64_t, 2> prune_counts{};  // backtracks by first / second rule
};

// Edge set of a hamiltonian cycle, as successor/predecessor per vertex.
class CycleCache {
 public:
  CycleCache() = default;
  explicit CycleCache(const std::vector<Vertex>& cycle);

  bool contains(Edge e) const;
  std::vector<Vertex> cycle() const;
  int size() const { return static_cast<int>(next_.size()); }

 private:
  std::vector<std::uint8_t> next_;
  std::vector<std::uint8_t> prev_;
};

SearchOutcome find_cycle(const PlanarGraph& g, const SearchOptions& opts = {});
SearchOutcome find_path(const PlanarGraph& g, const SearchOptions& opts = {});

// True iff the removed edge is not on the cached cycle, so the cycle survives.
bool cache_still_valid(const CycleCache& cache, Edge removed);

bool is_hamiltonian_cycle(const PlanarGraph& g, const std::vector<Vertex>& cycle);
bool is_hamiltonian_path(const PlanarGraph& g, const std::vector<Vertex>& path);

}  // namespace polycut
