#include "polycut/embed.hpp"

#include <algorithm>
#include <string>

#include "kernels.hpp"

namespace polycut {

namespace {

std::string vname(Vertex v) { return std::to_string(v); }

}  // namespace

bool Face::contains(Vertex v) const {
  return std::find(boundary.begin(), boundary.end(), v) != boundary.end();
}

PlanarGraph PlanarGraph::assemble(int n, const std::vector<std::vector<Vertex>>& rotations) {
  PlanarGraph g;
  g.n_ = n;
  g.offsets_.assign(n + 1, 0);
  for (Vertex v = 0; v < n; ++v)
    g.offsets_[v + 1] = g.offsets_[v] + static_cast<int>(rotations[v].size());
  const int darts = g.offsets_[n];
  g.heads_.resize(darts);
  g.tails_.resize(darts);
  g.twins_.assign(darts, -1);
  g.adjacency_.assign(n, VertexSet{});
  for (Vertex v = 0; v < n; ++v) {
    for (std::size_t i = 0; i < rotations[v].size(); ++i) {
      const int d = g.offsets_[v] + static_cast<int>(i);
      g.heads_[d] = static_cast<std::uint8_t>(rotations[v][i]);
      g.tails_[d] = static_cast<std::uint8_t>(v);
      g.adjacency_[v].set(rotations[v][i]);
    }
  }
  for (int d = 0; d < darts; ++d) {
    const Vertex u = g.tails_[d];
    const Vertex w = g.heads_[d];
    for (int e = g.offsets_[w]; e < g.offsets_[w + 1]; ++e) {
      if (g.heads_[e] == u) {
        g.twins_[d] = e;
        break;
      }
    }
  }
  return g;
}

PlanarGraph PlanarGraph::build(const std::vector<std::vector<Vertex>>& rotations) {
  const int n = static_cast<int>(rotations.size());
  if (n < 1 || n > kMaxVertices)
    throw Error(ErrorCode::TooManyVertices, "vertex count " + std::to_string(n) + " outside 1..255");
  for (Vertex v = 0; v < n; ++v) {
    VertexSet seen;
    for (Vertex w : rotations[v]) {
      if (w < 0 || w >= n)
        throw Error(ErrorCode::InvalidVertex, "vertex " + vname(v) + " lists " + vname(w));
      if (w == v) throw Error(ErrorCode::LoopOrMultiEdge, "self-loop at vertex " + vname(v));
      if (seen.test(w))
        throw Error(ErrorCode::LoopOrMultiEdge,
                    "vertex " + vname(v) + " lists neighbour " + vname(w) + " twice");
      seen.set(w);
    }
  }
  for (Vertex v = 0; v < n; ++v) {
    for (Vertex w : rotations[v]) {
      if (std::find(rotations[w].begin(), rotations[w].end(), v) == rotations[w].end())
        throw Error(ErrorCode::AsymmetricAdjacency,
                    "vertex " + vname(v) + " lists " + vname(w) + " but not conversely");
    }
  }

  PlanarGraph g = assemble(n, rotations);

  // Euler characteristic over face traversals; an isolated vertex is one face.
  std::vector<char> used(g.dart_count(), 0);
  int face_total = 0;
  for (int d = 0; d < g.dart_count(); ++d) {
    if (used[d]) continue;
    ++face_total;
    for (int e = d; !used[e]; e = g.next_on_face(e)) used[e] = 1;
  }
  for (Vertex v = 0; v < n; ++v)
    if (g.degree(v) == 0) ++face_total;
  if (n - g.edge_count() + face_total != 2)
    throw Error(ErrorCode::NotGenusZero,
                "V - E + F = " + std::to_string(n - g.edge_count() + face_total) + ", expected 2");
  return g;
}

int PlanarGraph::min_degree() const {
  int d = n_ > 0 ? degree(0) : 0;
  for (Vertex v = 1; v < n_; ++v) d = std::min(d, degree(v));
  return d;
}

std::vector<std::vector<Vertex>> PlanarGraph::rotations() const {
  std::vector<std::vector<Vertex>> r(n_);
  for (Vertex v = 0; v < n_; ++v) {
    auto rot = rotation(v);
    r[v].assign(rot.begin(), rot.end());
  }
  return r;
}

std::vector<Edge> PlanarGraph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count());
  for (Vertex v = 0; v < n_; ++v)
    for (Vertex w : rotation(v))
      if (v < w) out.push_back({v, w});
  return out;
}

int PlanarGraph::position(Vertex v, Vertex u) const {
  for (int d = offsets_[v]; d < offsets_[v + 1]; ++d)
    if (heads_[d] == u) return d - offsets_[v];
  return -1;
}

Vertex PlanarGraph::successor(Vertex v, Vertex u) const {
  const int i = position(v, u);
  return heads_[offsets_[v] + (i + 1) % degree(v)];
}

Vertex PlanarGraph::predecessor(Vertex v, Vertex u) const {
  const int i = position(v, u);
  return heads_[offsets_[v] + (i + degree(v) - 1) % degree(v)];
}

bool PlanarGraph::is_triangulation() const {
  if (n_ < 3) return false;
  for (int d = 0; d < dart_count(); ++d)
    if (next_on_face(next_on_face(next_on_face(d))) != d) return false;
  return true;
}

std::vector<Face> faces(const PlanarGraph& g) {
  std::vector<Face> out;
  out.reserve(g.face_count());
  std::vector<char> used(g.dart_count(), 0);
  for (int d = 0; d < g.dart_count(); ++d) {
    if (used[d]) continue;
    Face f;
    for (int e = d; !used[e]; e = g.next_on_face(e)) {
      used[e] = 1;
      f.boundary.push_back(g.tail(e));
    }
    out.push_back(std::move(f));
  }
  return out;
}

Face face_of(const PlanarGraph& g, Vertex u, Vertex v) {
  const int i = g.position(u, v);
  if (i < 0) throw Error(ErrorCode::NoSuchEdge, "{" + vname(u) + "," + vname(v) + "}");
  Face f;
  const int start = g.dart(u, i);
  int e = start;
  do {
    f.boundary.push_back(g.tail(e));
    e = g.next_on_face(e);
  } while (e != start);
  return f;
}

int vertex_connectivity_at_most_4(const PlanarGraph& g) {
  const int n = g.vertex_count();
  if (n < 4) throw Error(ErrorCode::TooSmall, "connectivity class needs n >= 4");
  return detail::with_adjacency(g, [n](const auto& adj, auto all) {
    using Set = std::decay_t<decltype(all)>;
    if (!detail::connected(adj, all)) return 0;
    for (Vertex a = 0; a < n; ++a)
      if (!detail::connected(adj, all - Set{a})) return 1;
    for (Vertex a = 0; a < n; ++a)
      for (Vertex b = a + 1; b < n; ++b)
        if (!detail::connected(adj, all - Set{a, b})) return 2;
    for (Vertex a = 0; a < n; ++a)
      for (Vertex b = a + 1; b < n; ++b)
        for (Vertex c = b + 1; c < n; ++c)
          if (!detail::connected(adj, all - Set{a, b, c})) return 3;
    return n == 4 ? 3 : 4;
  });
}

bool is_three_connected(const PlanarGraph& g) {
  const int n = g.vertex_count();
  if (n < 4) return false;
  return detail::with_adjacency(g, [n](const auto& adj, auto all) {
    using Set = std::decay_t<decltype(all)>;
    if (!detail::connected(adj, all)) return false;
    for (Vertex a = 0; a < n; ++a)
      for (Vertex b = a + 1; b < n; ++b)
        if (!detail::connected(adj, all - Set{a, b})) return false;
    return true;
  });
}

namespace {

// With g 3-connected, g - uv has a separating pair {a,b} iff a,b avoid u,v and
// u is cut off from v in g - uv - {a,b}.
template <class Set>
bool no_pair_separates(std::vector<Set>& adj, Set all, Vertex u, Vertex v) {
  adj[u].reset(v);
  adj[v].reset(u);
  bool ok = true;
  const int n = static_cast<int>(adj.size());
  for (Vertex a = 0; a < n && ok; ++a) {
    if (a == u || a == v) continue;
    for (Vertex b = a + 1; b < n; ++b) {
      if (b == u || b == v) continue;
      if (!detail::reach(adj, u, all - Set{a, b}).test(v)) {
        ok = false;
        break;
      }
    }
  }
  adj[u].set(v);
  adj[v].set(u);
  return ok;
}

}  // namespace

bool three_connected_without_edge(const PlanarGraph& g, Vertex u, Vertex v) {
  if (!g.adjacent(u, v)) throw Error(ErrorCode::NoSuchEdge, "{" + vname(u) + "," + vname(v) + "}");
  if (g.degree(u) <= 3 || g.degree(v) <= 3) return false;
  if (g.vertex_count() <= 64) {
    auto adj = detail::adjacency_as<SmallVertexSet>(g);
    return no_pair_separates(adj, SmallVertexSet::range(g.vertex_count()), u, v);
  }
  auto adj = detail::adjacency_as<VertexSet>(g);
  return no_pair_separates(adj, VertexSet::range(g.vertex_count()), u, v);
}

int component_count(const PlanarGraph& g, const VertexSet& removed) {
  return detail::with_adjacency(g, [&](const auto& adj, auto all) {
    using Set = std::decay_t<decltype(all)>;
    return detail::count_components(adj, all - detail::narrow<Set>(removed));
  });
}

std::vector<int> component_labels(const PlanarGraph& g, const VertexSet& removed) {
  std::vector<int> label(g.vertex_count(), -1);
  std::vector<VertexSet> adj(g.vertex_count());
  for (Vertex v = 0; v < g.vertex_count(); ++v) adj[v] = g.neighbors(v);
  VertexSet rest = g.vertices() - removed;
  for (int c = 0; rest.any(); ++c) {
    const VertexSet comp = detail::reach(adj, rest.first(), rest);
    for (Vertex v : comp) label[v] = c;
    rest -= comp;
  }
  return label;
}

PlanarGraph remove_edge(const PlanarGraph& g, Vertex u, Vertex v) {
  if (u < 0 || v < 0 || u >= g.vertex_count() || v >= g.vertex_count() || !g.adjacent(u, v))
    throw Error(ErrorCode::NoSuchEdge, "{" + vname(u) + "," + vname(v) + "}");
  // A bridge has both darts on one face; deleting it would disconnect the graph.
  const int d = g.dart(u, g.position(u, v));
  for (int e = g.next_on_face(d); e != d; e = g.next_on_face(e))
    if (e == g.twin(d))
      throw Error(ErrorCode::NotGenusZero, "{" + vname(u) + "," + vname(v) + "} is a bridge");
  auto rot = g.rotations();
  std::erase(rot[u], v);
  std::erase(rot[v], u);
  return PlanarGraph::build(rot);
}

namespace {

// Position of the first occurrence of v on the boundary, or -1.
int boundary_index(const Face& f, Vertex v) {
  auto it = std::find(f.boundary.begin(), f.boundary.end(), v);
  return it == f.boundary.end() ? -1 : static_cast<int>(it - f.boundary.begin());
}

bool is_face_of(const PlanarGraph& g, const Face& f) {
  const int k = f.length();
  if (k < 1) return false;
  for (int i = 0; i < k; ++i) {
    const Vertex a = f.boundary[i];
    const Vertex b = f.boundary[(i + 1) % k];
    if (a < 0 || a >= g.vertex_count() || b < 0 || b >= g.vertex_count() || !g.adjacent(a, b))
      return false;
  }
  // The first dart must generate exactly this traversal.
  const Face traced = face_of(g, f.boundary[0], f.boundary[k > 1 ? 1 : 0]);
  return traced.boundary == f.boundary;
}

}  // namespace

PlanarGraph insert_edge_in_face(const PlanarGraph& g, const Face& f, Vertex a, Vertex b) {
  if (!is_face_of(g, f)) throw Error(ErrorCode::NotOnFace, "argument is not a face of the graph");
  const int ia = boundary_index(f, a);
  const int ib = boundary_index(f, b);
  if (ia < 0 || ib < 0 || a == b)
    throw Error(ErrorCode::NotOnFace, vname(a) + " or " + vname(b) + " not on face");
  if (g.adjacent(a, b))
    throw Error(ErrorCode::AlreadyAdjacent, "{" + vname(a) + "," + vname(b) + "}");
  const int k = f.length();
  // Insert b right after a's predecessor on the face, and vice versa.
  const Vertex pa = f.boundary[(ia + k - 1) % k];
  const Vertex pb = f.boundary[(ib + k - 1) % k];
  auto rot = g.rotations();
  rot[a].insert(rot[a].begin() + g.position(a, pa) + 1, b);
  rot[b].insert(rot[b].begin() + g.position(b, pb) + 1, a);
  return PlanarGraph::build(rot);
}

PlanarGraph insert_vertex_in_face(const PlanarGraph& g, const Face& f) {
  if (!is_face_of(g, f)) throw Error(ErrorCode::NotOnFace, "argument is not a face of the graph");
  const int n = g.vertex_count();
  if (n + 1 > kMaxVertices) throw Error(ErrorCode::TooManyVertices, "graph already has 255 vertices");
  for (Vertex x : f.boundary)
    if (std::count(f.boundary.begin(), f.boundary.end(), x) > 1)
      throw Error(ErrorCode::LoopOrMultiEdge, "face boundary repeats vertex " + vname(x));
  auto rot = g.rotations();
  const int k = f.length();
  for (int i = 0; i < k; ++i) {
    const Vertex x = f.boundary[i];
    const Vertex p = f.boundary[(i + k - 1) % k];
    rot[x].insert(rot[x].begin() + g.position(x, p) + 1, n);
  }
  rot.emplace_back(f.boundary.rbegin(), f.boundary.rend());
  return PlanarGraph::build(rot);
}

PlanarGraph mirror(const PlanarGraph& g) {
  auto rot = g.rotations();
  for (auto& r : rot) std::reverse(r.begin(), r.end());
  return PlanarGraph::build(rot);
}

PlanarGraph relabel(const PlanarGraph& g, std::span<const Vertex> perm) {
  const int n = g.vertex_count();
  std::vector<std::vector<Vertex>> rot(n);
  for (Vertex v = 0; v < n; ++v)
    for (Vertex w : g.rotation(v)) rot[perm[v]].push_back(perm[w]);
  return PlanarGraph::build(rot);
}

PlanarGraph induced_subgraph(const PlanarGraph& g, const VertexSet& drop, std::vector<Vertex>* kept) {
  std::vector<Vertex> new_index(g.vertex_count(), -1);
  std::vector<Vertex> old_index;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (drop.test(v)) continue;
    new_index[v] = static_cast<Vertex>(old_index.size());
    old_index.push_back(v);
  }
  std::vector<std::vector<Vertex>> rot(old_index.size());
  for (std::size_t i = 0; i < old_index.size(); ++i)
    for (Vertex w : g.rotation(old_index[i]))
      if (new_index[w] >= 0) rot[i].push_back(new_index[w]);
  if (kept) *kept = old_index;
  return PlanarGraph::build(rot);
}

}  // namespace polycut
