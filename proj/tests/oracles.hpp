#pragma once

// Slow, obviously-correct reference implementations. They only read the
// adjacency of a PlanarGraph and share no code with the library algorithms.

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <string>
#include <vector>

#include "polycut/embed.hpp"

namespace oracle {

using Adj = std::vector<std::vector<int>>;

inline Adj adjacency(const polycut::PlanarGraph& g) {
  Adj adj(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v)
    for (auto w : g.rotation(v)) adj[v].push_back(w);
  return adj;
}

inline Adj from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
  Adj adj(n);
  for (auto [a, b] : edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  return adj;
}

// Components of the graph with `removed` vertices deleted.
inline int components(const Adj& adj, const std::vector<bool>& removed) {
  const int n = static_cast<int>(adj.size());
  std::vector<bool> seen(removed);
  int count = 0;
  for (int s = 0; s < n; ++s) {
    if (seen[s]) continue;
    ++count;
    std::vector<int> stack{s};
    seen[s] = true;
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      for (int w : adj[v])
        if (!seen[w]) {
          seen[w] = true;
          stack.push_back(w);
        }
    }
  }
  return count;
}

inline int components_without(const Adj& adj, std::initializer_list<int> drop) {
  std::vector<bool> removed(adj.size(), false);
  for (int v : drop) removed[v] = true;
  return components(adj, removed);
}

inline int components_mask(const Adj& adj, std::uint64_t mask) {
  std::vector<bool> removed(adj.size(), false);
  for (std::size_t v = 0; v < adj.size(); ++v) removed[v] = (mask >> v) & 1;
  return components(adj, removed);
}

inline std::vector<std::array<int, 3>> three_cuts(const Adj& adj) {
  const int n = static_cast<int>(adj.size());
  std::vector<std::array<int, 3>> out;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c)
        if (components_without(adj, {a, b, c}) >= 2) out.push_back({a, b, c});
  return out;
}

// Max number of internally vertex-disjoint s-t paths (unit capacities on split vertices).
inline int disjoint_paths(const Adj& adj, int s, int t) {
  const int n = static_cast<int>(adj.size());
  const int N = 2 * n;  // v_in = 2v, v_out = 2v+1
  std::vector<std::map<int, int>> cap(N);
  for (int v = 0; v < n; ++v) cap[2 * v][2 * v + 1] = (v == s || v == t) ? n : 1;
  for (int v = 0; v < n; ++v)
    for (int w : adj[v]) cap[2 * v + 1][2 * w] += 1;
  const int src = 2 * s + 1, dst = 2 * t;
  int flow = 0;
  while (true) {
    std::vector<int> parent(N, -1);
    parent[src] = src;
    std::queue<int> q;
    q.push(src);
    while (!q.empty() && parent[dst] < 0) {
      const int x = q.front();
      q.pop();
      for (auto [y, c] : cap[x])
        if (c > 0 && parent[y] < 0) {
          parent[y] = x;
          q.push(y);
        }
    }
    if (parent[dst] < 0) return flow;
    for (int y = dst; y != src; y = parent[y]) {
      const int x = parent[y];
      cap[x][y] -= 1;
      cap[y][x] += 1;
    }
    ++flow;
  }
}

// Vertex connectivity by Menger, capped at 4. Complete graphs give n-1.
inline int connectivity_class(const Adj& adj) {
  const int n = static_cast<int>(adj.size());
  int best = n - 1;
  for (int s = 0; s < n; ++s)
    for (int t = s + 1; t < n; ++t) {
      if (std::find(adj[s].begin(), adj[s].end(), t) != adj[s].end()) continue;
      best = std::min(best, disjoint_paths(adj, s, t));
    }
  return std::min(best, 4);
}

inline bool has_edge(const Adj& adj, int a, int b) {
  return std::find(adj[a].begin(), adj[a].end(), b) != adj[a].end();
}

// Exhaustive over permutations with vertex 0 fixed first.
inline bool hamiltonian_cycle(const Adj& adj) {
  const int n = static_cast<int>(adj.size());
  if (n < 3) return false;
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  do {
    bool ok = true;
    for (int i = 0; i < n && ok; ++i) ok = has_edge(adj, p[i], p[(i + 1) % n]);
    if (ok) return true;
  } while (std::next_permutation(p.begin() + 1, p.end()));
  return false;
}

inline bool hamiltonian_path(const Adj& adj) {
  const int n = static_cast<int>(adj.size());
  if (n == 1) return true;
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  do {
    bool ok = true;
    for (int i = 0; i + 1 < n && ok; ++i) ok = has_edge(adj, p[i], p[i + 1]);
    if (ok) return true;
  } while (std::next_permutation(p.begin(), p.end()));
  return false;
}

struct Scatter {
  bool defined = false;
  int value = 0;
};

inline Scatter scattering(const Adj& adj) {
  const int n = static_cast<int>(adj.size());
  Scatter s;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    const int size = __builtin_popcountll(mask);
    if (size == n) continue;
    const int c = components_mask(adj, mask);
    if (c < 2) continue;
    if (!s.defined || c - size > s.value) s = {true, c - size};
  }
  return s;
}

// Isomorphism-class key of an abstract graph: lexicographically least
// adjacency matrix over relabelings that list vertices by descending degree.
inline std::string abstract_key(const Adj& adj) {
  const int n = static_cast<int>(adj.size());
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  auto deg = [&](int v) { return static_cast<int>(adj[v].size()); };
  std::sort(order.begin(), order.end(), [&](int a, int b) { return deg(a) > deg(b); });
  // permute within blocks of equal degree
  std::vector<std::pair<int, int>> blocks;
  for (int i = 0; i < n;) {
    int j = i;
    while (j < n && deg(order[j]) == deg(order[i])) ++j;
    blocks.push_back({i, j});
    i = j;
  }
  std::string best;
  std::vector<std::vector<bool>> m(n, std::vector<bool>(n));
  for (int v = 0; v < n; ++v)
    for (int w : adj[v]) m[v][w] = true;
  auto visit = [&](auto&& self, std::size_t b) -> void {
    if (b == blocks.size()) {
      std::string key(n * n, '0');
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          if (m[order[i]][order[j]]) key[i * n + j] = '1';
      if (best.empty() || key < best) best = key;
      return;
    }
    auto [lo, hi] = blocks[b];
    std::sort(order.begin() + lo, order.begin() + hi);
    do self(self, b + 1);
    while (std::next_permutation(order.begin() + lo, order.begin() + hi));
  };
  visit(visit, 0);
  return std::to_string(n) + ":" + best;
}

// Number of faces of a rotation system (rot[v] lists neighbours cyclically).
inline int face_count(const std::vector<std::vector<int>>& rot) {
  const int n = static_cast<int>(rot.size());
  std::set<std::pair<int, int>> used;
  int faces = 0;
  for (int u = 0; u < n; ++u)
    for (int v : rot[u]) {
      if (used.count({u, v})) continue;
      ++faces;
      int a = u, b = v;
      while (!used.count({a, b})) {
        used.insert({a, b});
        const auto& r = rot[b];
        const int i = static_cast<int>(std::find(r.begin(), r.end(), a) - r.begin());
        const int c = r[(i + 1) % r.size()];
        a = b;
        b = c;
      }
    }
  return faces;
}

// Isomorphism classes of triangulations on n vertices: all edge sets with
// 3n-6 edges admitting a rotation system of genus 0, deduped abstractly
// (3-connected planar graphs have a unique embedding up to reflection).
inline std::set<std::string> triangulation_classes(int n) {
  std::vector<std::pair<int, int>> all;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) all.push_back({a, b});
  const int m = 3 * n - 6;
  const int total = static_cast<int>(all.size());
  std::set<std::string> classes;
  std::vector<int> pick(m);
  std::iota(pick.begin(), pick.end(), 0);
  while (true) {
    std::vector<std::pair<int, int>> edges;
    for (int i : pick) edges.push_back(all[i]);
    const Adj adj = from_edges(n, edges);
    bool degrees_ok = true;
    for (const auto& nb : adj) degrees_ok = degrees_ok && nb.size() >= 3;
    if (degrees_ok) {
      // rotations: cyclic orders of each neighbourhood with the first neighbour fixed
      std::vector<std::vector<std::vector<int>>> options(n);
      for (int v = 0; v < n; ++v) {
        std::vector<int> nb = adj[v];
        std::sort(nb.begin(), nb.end());
        // in a triangulation consecutive neighbours close a face, so they are adjacent
        do {
          bool link = true;
          for (std::size_t i = 0; i < nb.size() && link; ++i) link = has_edge(adj, nb[i], nb[(i + 1) % nb.size()]);
          if (link) options[v].push_back(nb);
        } while (std::next_permutation(nb.begin() + 1, nb.end()));
      }
      std::vector<std::vector<int>> rot(n);
      bool found = false;
      auto choose = [&](auto&& self, int v) -> void {
        if (found) return;
        if (v == n) {
          found = face_count(rot) == 2 * n - 4;
          return;
        }
        for (const auto& o : options[v]) {
          rot[v] = o;
          self(self, v + 1);
          if (found) return;
        }
      };
      choose(choose, 0);
      if (found) classes.insert(abstract_key(adj));
    }
    int i = m - 1;
    while (i >= 0 && pick[i] == total - m + i) --i;
    if (i < 0) break;
    ++pick[i];
    for (int j = i + 1; j < m; ++j) pick[j] = pick[j - 1] + 1;
  }
  return classes;
}

// Isomorphism classes of 3-connected spanning subgraphs of the given
// triangulations, by trying every edge subset.
inline std::set<std::string> polyhedron_classes(const std::vector<polycut::PlanarGraph>& triangulations) {
  std::set<std::string> classes;
  for (const auto& t : triangulations) {
    const int n = t.vertex_count();
    std::vector<std::pair<int, int>> edges;
    for (auto e : t.edges()) edges.push_back({e.u, e.v});
    const int m = static_cast<int>(edges.size());
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
      if (__builtin_popcountll(mask) < (3 * n + 1) / 2) continue;
      std::vector<std::pair<int, int>> keep;
      for (int i = 0; i < m; ++i)
        if ((mask >> i) & 1) keep.push_back(edges[i]);
      const Adj adj = from_edges(n, keep);
      if (components_mask(adj, 0) != 1) continue;
      if (connectivity_class(adj) < 3) continue;
      classes.insert(abstract_key(adj));
    }
  }
  return classes;
}

}  // namespace oracle
