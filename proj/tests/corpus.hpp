#pragma once

#include <algorithm>
#include <map>
#include <mutex>
#include <random>
#include <vector>

#include "polycut/construct.hpp"

namespace testing_corpus {

// All polyhedra on n vertices, produced once per process by the generator.
inline const std::vector<polycut::PlanarGraph>& polyhedra(int n) {
  static std::mutex mutex;
  static std::map<int, std::vector<polycut::PlanarGraph>> cache;
  std::lock_guard lock(mutex);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  std::vector<polycut::PlanarGraph> out;
  polycut::SeenSet seen;
  for (const auto& t : polycut::generate_triangulations(n))
    for (auto& [g, report] : polycut::expand_polyhedra(t, 0, std::numeric_limits<int>::max(), &seen))
      out.push_back(std::move(g));
  return cache.emplace(n, std::move(out)).first->second;
}

inline std::vector<polycut::PlanarGraph> polyhedra_up_to(int max_n) {
  std::vector<polycut::PlanarGraph> out;
  for (int n = 4; n <= max_n; ++n) {
    const auto& c = polyhedra(n);
    out.insert(out.end(), c.begin(), c.end());
  }
  return out;
}

inline std::vector<polycut::Vertex> random_permutation(int n, std::mt19937& rng) {
  std::vector<polycut::Vertex> p(n);
  for (int i = 0; i < n; ++i) p[i] = i;
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

// Connected plane graphs from random edge-deletion sequences (bridges are
// never removed). Mostly not 3-connected; many are not hamiltonian.
inline std::vector<polycut::PlanarGraph> thinned(const std::vector<polycut::PlanarGraph>& graphs, int walks,
                                                 unsigned seed) {
  std::mt19937 rng(seed);
  std::vector<polycut::PlanarGraph> out;
  for (const auto& g : graphs)
    for (int w = 0; w < walks; ++w) {
      polycut::PlanarGraph h = g;
      while (true) {
        auto edges = h.edges();
        std::shuffle(edges.begin(), edges.end(), rng);
        bool removed = false;
        for (const auto e : edges) {
          try {
            h = polycut::remove_edge(h, e.u, e.v);
          } catch (const polycut::Error&) {
            continue;
          }
          removed = true;
          break;
        }
        if (!removed) break;
        out.push_back(h);
        if (rng() % 4 == 0) break;
      }
    }
  return out;
}

}  // namespace testing_corpus
