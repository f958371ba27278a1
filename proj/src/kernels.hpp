#pragma once

// Bitset graph kernels shared by the modules. Each kernel is templated on the
// set type so that graphs with n <= 64 run on single machine words.

#include <vector>

#include "polycut/embed.hpp"

namespace polycut::detail {

template <class Set>
Set reach(const std::vector<Set>& adj, Vertex start, const Set& allowed) {
  Set comp = Set::single(start);
  Set frontier = comp;
  while (frontier.any()) {
    Set next;
    for (Vertex v : frontier) next |= adj[v];
    next &= allowed;
    next -= comp;
    comp |= next;
    frontier = next;
  }
  return comp;
}

template <class Set>
int count_components(const std::vector<Set>& adj, Set remaining) {
  int c = 0;
  while (remaining.any()) {
    remaining -= reach(adj, remaining.first(), remaining);
    ++c;
  }
  return c;
}

template <class Set>
bool connected(const std::vector<Set>& adj, const Set& remaining) {
  if (remaining.empty()) return true;
  return reach(adj, remaining.first(), remaining) == remaining;
}

template <class Set>
std::vector<Set> adjacency_as(const PlanarGraph& g) {
  std::vector<Set> adj(g.vertex_count());
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    adj[v] = g.neighbors(v).template resized<sizeof(Set) / 8>();
  return adj;
}

// Calls f(adjacency, universe) with the narrowest set type that holds g.
template <class F>
decltype(auto) with_adjacency(const PlanarGraph& g, F&& f) {
  if (g.vertex_count() <= 64) {
    auto adj = adjacency_as<SmallVertexSet>(g);
    return f(adj, SmallVertexSet::range(g.vertex_count()));
  }
  auto adj = adjacency_as<VertexSet>(g);
  return f(adj, VertexSet::range(g.vertex_count()));
}

template <class Set>
Set narrow(const VertexSet& s) {
  return s.template resized<sizeof(Set) / 8>();
}

}  // namespace polycut::detail
