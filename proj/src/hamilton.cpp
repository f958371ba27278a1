#include "polycut/hamilton.hpp"

#include <stdexcept>

#include "kernels.hpp"

namespace polycut {

CycleCache::CycleCache(const std::vector<Vertex>& cycle)
    : next_(cycle.size()), prev_(cycle.size()) {
  const std::size_t k = cycle.size();
  for (std::size_t i = 0; i < k; ++i) {
    next_[cycle[i]] = static_cast<std::uint8_t>(cycle[(i + 1) % k]);
    prev_[cycle[(i + 1) % k]] = static_cast<std::uint8_t>(cycle[i]);
  }
}

bool CycleCache::contains(Edge e) const {
  if (e.u >= size() || e.v >= size()) return false;
  return next_[e.u] == e.v || prev_[e.u] == e.v;
}

std::vector<Vertex> CycleCache::cycle() const {
  std::vector<Vertex> out;
  if (next_.empty()) return out;
  Vertex v = 0;
  do {
    out.push_back(v);
    v = next_[v];
  } while (v != 0 && out.size() <= next_.size());
  return out;
}

bool cache_still_valid(const CycleCache& cache, Edge removed) { return !cache.contains(removed); }

bool is_hamiltonian_path(const PlanarGraph& g, const std::vector<Vertex>& path) {
  if (static_cast<int>(path.size()) != g.vertex_count()) return false;
  VertexSet seen;
  for (std::size_t i = 0; i < path.size(); ++i) {
    const Vertex v = path[i];
    if (v < 0 || v >= g.vertex_count() || seen.test(v)) return false;
    seen.set(v);
    if (i > 0 && !g.adjacent(path[i - 1], v)) return false;
  }
  return true;
}

bool is_hamiltonian_cycle(const PlanarGraph& g, const std::vector<Vertex>& cycle) {
  if (g.vertex_count() < 3 || !is_hamiltonian_path(g, cycle)) return false;
  return g.adjacent(cycle.front(), cycle.back());
}

namespace {

// Depth-first path extension at the end vertex. Neighbours are tried in
// rotation order, starting just after the predecessor.
template <class Set>
class PathSearch {
 public:
  PathSearch(const PlanarGraph& g, const SearchOptions& opts, SearchOutcome& out)
      : g_(g), opts_(opts), out_(out), adj_(detail::adjacency_as<Set>(g)) {}

  bool cycle_from(Vertex s) {
    start_ = s;
    unvisited_ = Set::range(g_.vertex_count());
    unvisited_.reset(s);
    path_.assign(1, s);
    return extend_cycle(s, -1);
  }

  bool path_from(Vertex s) {
    start_ = s;
    unvisited_ = Set::range(g_.vertex_count());
    unvisited_.reset(s);
    path_.assign(1, s);
    return extend_path(s, -1);
  }

  const std::vector<Vertex>& path() const { return path_; }

 private:
  template <class Recurse>
  bool branch(Vertex end, Vertex prev, Recurse&& recurse) {
    const auto rot = g_.rotation(end);
    const int deg = static_cast<int>(rot.size());
    const int begin = prev < 0 ? 0 : g_.position(end, prev) + 1;
    for (int j = 0; j < deg; ++j) {
      const Vertex next = rot[(begin + j) % deg];
      if (!unvisited_.test(next)) continue;
      unvisited_.reset(next);
      path_.push_back(next);
      if (recurse(next, end)) return true;
      path_.pop_back();
      unvisited_.set(next);
    }
    return false;
  }

  bool extend_cycle(Vertex end, Vertex prev) {
    ++out_.nodes_expanded;
    if (unvisited_.empty()) return adj_[end].test(start_);
    if (opts_.first_rule && !adj_[start_].intersects(unvisited_)) {
      ++out_.prune_counts[0];
      return false;
    }
    if (opts_.second_rule) {
      Set pool = unvisited_;
      pool.set(start_);
      pool.set(end);
      for (Vertex x : unvisited_) {
        if ((adj_[x] & pool).count() < 2) {
          ++out_.prune_counts[1];
          return false;
        }
      }
    }
    return branch(end, prev, [this](Vertex n, Vertex e) { return extend_cycle(n, e); });
  }

  bool extend_path(Vertex end, Vertex prev) {
    ++out_.nodes_expanded;
    if (unvisited_.empty()) return true;
    if (opts_.first_rule || opts_.second_rule) {
      Set pool = unvisited_;
      pool.set(end);
      int low = 0;
      for (Vertex x : unvisited_) {
        const int k = (adj_[x] & pool).count();
        if (k == 0 && opts_.first_rule) {
          ++out_.prune_counts[0];
          return false;
        }
        if (k < 2 && ++low >= 2 && opts_.second_rule) {
          ++out_.prune_counts[1];
          return false;
        }
      }
    }
    return branch(end, prev, [this](Vertex n, Vertex e) { return extend_path(n, e); });
  }

  const PlanarGraph& g_;
  const SearchOptions& opts_;
  SearchOutcome& out_;
  std::vector<Set> adj_;
  Set unvisited_;
  Vertex start_ = 0;
  std::vector<Vertex> path_;
};

template <class Set>
SearchOutcome run_cycle(const PlanarGraph& g, const SearchOptions& opts) {
  SearchOutcome out;
  PathSearch<Set> search(g, opts, out);
  if (search.cycle_from(0)) {
    out.found = true;
    out.witness = search.path();
  }
  return out;
}

template <class Set>
SearchOutcome run_path(const PlanarGraph& g, const SearchOptions& opts) {
  SearchOutcome out;
  PathSearch<Set> search(g, opts, out);
  for (Vertex s = 0; s < g.vertex_count(); ++s) {
    if (search.path_from(s)) {
      out.found = true;
      out.witness = search.path();
      break;
    }
  }
  return out;
}

}  // namespace

SearchOutcome find_cycle(const PlanarGraph& g, const SearchOptions& opts) {
  if (g.vertex_count() < 3) return {};
  SearchOutcome out =
      g.vertex_count() <= 64 ? run_cycle<SmallVertexSet>(g, opts) : run_cycle<VertexSet>(g, opts);
  if (out.found && !is_hamiltonian_cycle(g, out.witness))
    throw std::logic_error("cycle search produced an invalid witness");
  return out;
}

SearchOutcome find_path(const PlanarGraph& g, const SearchOptions& opts) {
  if (g.vertex_count() == 1) {
    SearchOutcome out;
    out.found = true;
    out.witness = {0};
    return out;
  }
  SearchOutcome out =
      g.vertex_count() <= 64 ? run_path<SmallVertexSet>(g, opts) : run_path<VertexSet>(g, opts);
  if (out.found && !is_hamiltonian_path(g, out.witness))
    throw std::logic_error("path search produced an invalid witness");
  return out;
}

}  // namespace polycut
