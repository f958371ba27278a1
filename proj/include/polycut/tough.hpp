#pragma once

#include <optional>

#include "polycut/embed.hpp"

namespace polycut {

inline constexpr int kDefaultScatterCap = 20;

// s(G) = max{ c(G - X) - |X| : c(G - X) >= 2 }. Undefined (no value) when no
// vertex set disconnects G, as for complete graphs.
struct ScatterResult {
  std::optional<int> value;
  VertexSet witness;  // smallest maximizing X, lexicographically least among those

  bool defined() const { return value.has_value(); }
};

// Exact scattering number by enumerating X in order of increasing size.
// `cut_count`, when given, is the graph's number of 3-cuts d; for a polyhedron
// c(G - X) <= |X| - 2 + floor(d/2) then bounds the value and stops the search
// as soon as the bound is attained.
ScatterResult scattering_number(const PlanarGraph& g, int n_cap = kDefaultScatterCap,
                                std::optional<int> cut_count = std::nullopt);

// Some X with c(G - X) >= 2 and c(G - X) - |X| > k, if one exists.
std::optional<VertexSet> find_scattering_above(const PlanarGraph& g, int k,
                                               int n_cap = kDefaultScatterCap);

// 1-tough iff the scattering number is undefined or <= 0.
bool is_one_tough(const PlanarGraph& g, int n_cap = kDefaultScatterCap);

// Checks c(G - S) <= |S| - 2 + floor(d/2) for every S with c(G - S) >= 2.
// Returns a violating S, or nothing when the bound holds.
std::optional<VertexSet> verify_cut_bound(const PlanarGraph& g, int d,
                                          int n_cap = kDefaultScatterCap);

// A triangulation containing g, built by adding chords that never join two
// different components of g - s, so c(T - s) = c(g - s).
PlanarGraph triangulate_preserving(const PlanarGraph& g, const VertexSet& s);

}  // namespace polycut
