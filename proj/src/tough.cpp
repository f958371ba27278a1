#include "polycut/tough.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

#include "kernels.hpp"

namespace polycut {

namespace {

void check_cap(const PlanarGraph& g, int n_cap) {
  const int n = g.vertex_count();
  if (n > n_cap || n > 64)
    throw Error(ErrorCode::TooLarge, "n = " + std::to_string(n) + " exceeds subset-enumeration cap " +
                                         std::to_string(std::min(n_cap, 64)));
}

// Maximum of c(G - X) - |X| over disconnecting X. Stops early once the value
// exceeds `stop_above` or reaches `upper`.
ScatterResult scatter_search(const PlanarGraph& g, std::optional<int> upper, std::optional<int> stop_above) {
  const int n = g.vertex_count();
  const auto adj = detail::adjacency_as<SmallVertexSet>(g);
  const SmallVertexSet all = SmallVertexSet::range(n);
  ScatterResult best;
  std::vector<int> idx;
  for (int k = 1; k <= n - 2; ++k) {
    if (best.value && *best.value >= n - 2 * k) break;
    idx.resize(k);
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
      SmallVertexSet x;
      for (int i : idx) x.set(i);
      const int c = detail::count_components(adj, all - x);
      if (c >= 2 && (!best.value || c - k > *best.value)) {
        best.value = c - k;
        best.witness = VertexSet{};
        for (int i : idx) best.witness.set(i);
        if (upper && *best.value >= *upper) return best;
        if (stop_above && *best.value > *stop_above) return best;
      }
      // next combination in lexicographic order
      int i = k - 1;
      while (i >= 0 && idx[i] == n - k + i) --i;
      if (i < 0) break;
      ++idx[i];
      for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  return best;
}

}  // namespace

ScatterResult scattering_number(const PlanarGraph& g, int n_cap, std::optional<int> cut_count) {
  check_cap(g, n_cap);
  std::optional<int> upper;
  if (cut_count) upper = *cut_count / 2 - 2;
  return scatter_search(g, upper, std::nullopt);
}

std::optional<VertexSet> find_scattering_above(const PlanarGraph& g, int k, int n_cap) {
  check_cap(g, n_cap);
  const ScatterResult r = scatter_search(g, std::nullopt, k);
  if (r.value && *r.value > k) return r.witness;
  return std::nullopt;
}

bool is_one_tough(const PlanarGraph& g, int n_cap) { return !find_scattering_above(g, 0, n_cap); }

std::optional<VertexSet> verify_cut_bound(const PlanarGraph& g, int d, int n_cap) {
  check_cap(g, n_cap);
  const int n = g.vertex_count();
  const auto adj = detail::adjacency_as<SmallVertexSet>(g);
  const SmallVertexSet all = SmallVertexSet::range(n);
  const std::uint64_t limit = std::uint64_t{1} << n;
  for (std::uint64_t mask = 1; mask < limit; ++mask) {
    SmallVertexSet s;
    s.set_word(0, mask);
    const int size = std::popcount(mask);
    if (size > n - 2) continue;
    const int c = detail::count_components(adj, all - s);
    if (c >= 2 && c > size - 2 + d / 2) return s.resized<4>();
  }
  return std::nullopt;
}

PlanarGraph triangulate_preserving(const PlanarGraph& g, const VertexSet& s) {
  const VertexSet all = g.vertices();
  if (!s.is_subset_of(all) || component_count(g, s) < 2)
    throw Error(ErrorCode::NotSplittingSet, "G - S must have at least two components");
  const std::vector<int> comp = component_labels(g, s);
  auto connecting = [&](Vertex a, Vertex b) {
    return comp[a] >= 0 && comp[b] >= 0 && comp[a] != comp[b];
  };

  PlanarGraph t = g;
  while (true) {
    const std::vector<Face> fs = faces(t);
    auto open = std::find_if(fs.begin(), fs.end(), [](const Face& f) { return f.length() > 3; });
    if (open == fs.end()) return t;
    const Face& f = *open;
    const int k = f.length();
    std::optional<Edge> chord;
    for (int i = 0; i < k; ++i) {
      for (int j = i + 2; j < k; ++j) {
        if (i == 0 && j == k - 1) continue;
        const Vertex a = f.boundary[i], b = f.boundary[j];
        if (a == b || t.adjacent(a, b) || connecting(a, b)) continue;
        const Edge e = Edge::of(a, b);
        if (!chord || e < *chord) chord = e;
      }
    }
    if (!chord)
      throw Error(ErrorCode::NotThreeConnected, "no admissible chord in a non-triangular face");
    t = insert_edge_in_face(t, f, chord->u, chord->v);
  }
}

}  // namespace polycut
