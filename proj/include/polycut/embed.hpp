#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "polycut/error.hpp"
#include "polycut/vertex_set.hpp"

namespace polycut {

inline constexpr int kMaxVertices = 255;

// Undirected edge, normalized so that u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  static constexpr Edge of(Vertex a, Vertex b) { return a < b ? Edge{a, b} : Edge{b, a}; }
  friend constexpr bool operator==(const Edge&, const Edge&) = default;
  friend constexpr auto operator<=>(const Edge&, const Edge&) = default;
};

// One face traversal. Consecutive boundary entries (cyclically) are the
// directed edges of the face in traversal order.
struct Face {
  std::vector<Vertex> boundary;

  int length() const { return static_cast<int>(boundary.size()); }
  bool contains(Vertex v) const;
};

// Immutable combinatorial embedding of a connected simple plane graph.
//
// rotation(v) lists the neighbours of v in clockwise order, which is also how
// planar_code stores them. Faces are traced with
//
//     next(u -> v) = (v -> w),  w = the neighbour following u in rotation(v)
//
// and every directed edge ("dart") lies on exactly one face.
class PlanarGraph {
 public:
  PlanarGraph() = default;

  // Validates symmetry, simplicity and genus 0; throws Error otherwise.
  static PlanarGraph build(const std::vector<std::vector<Vertex>>& rotations);

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(heads_.size()) / 2; }
  int face_count() const { return edge_count() - vertex_count() + 2; }
  int degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }
  int min_degree() const;

  std::span<const std::uint8_t> rotation(Vertex v) const {
    return {heads_.data() + offsets_[v], static_cast<std::size_t>(degree(v))};
  }
  const VertexSet& neighbors(Vertex v) const { return adjacency_[v]; }
  bool adjacent(Vertex a, Vertex b) const { return adjacency_[a].test(b); }
  VertexSet vertices() const { return VertexSet::range(n_); }

  std::vector<std::vector<Vertex>> rotations() const;
  std::vector<Edge> edges() const;

  // Index of u in rotation(v), or -1.
  int position(Vertex v, Vertex u) const;
  // Neighbour following u in rotation(v).
  Vertex successor(Vertex v, Vertex u) const;
  // Neighbour preceding u in rotation(v).
  Vertex predecessor(Vertex v, Vertex u) const;

  // Dart-level access: dart d = offset(v) + i is the directed edge v -> rotation(v)[i].
  int dart_count() const { return static_cast<int>(heads_.size()); }
  int dart(Vertex v, int i) const { return offsets_[v] + i; }
  Vertex tail(int d) const { return tails_[d]; }
  Vertex head(int d) const { return heads_[d]; }
  int twin(int d) const { return twins_[d]; }
  int next_on_face(int d) const {
    const Vertex v = heads_[d];
    const int t = twins_[d] - offsets_[v] + 1;
    return offsets_[v] + (t == degree(v) ? 0 : t);
  }

  bool is_triangulation() const;

  friend bool operator==(const PlanarGraph& a, const PlanarGraph& b) {
    return a.n_ == b.n_ && a.offsets_ == b.offsets_ && a.heads_ == b.heads_;
  }

 private:
  friend class GraphAccess;
  static PlanarGraph assemble(int n, const std::vector<std::vector<Vertex>>& rotations);

  int n_ = 0;
  std::vector<int> offsets_;
  std::vector<std::uint8_t> heads_;
  std::vector<std::uint8_t> tails_;
  std::vector<int> twins_;
  std::vector<VertexSet> adjacency_;
};

// All face traversals, in order of their lowest dart.
std::vector<Face> faces(const PlanarGraph& g);

// The face traversed by the dart u -> v.
Face face_of(const PlanarGraph& g, Vertex u, Vertex v);

// Exact connectivity class: 1, 2, 3, or 4 meaning "at least 4".
// K_k counts as (k-1)-connected.
int vertex_connectivity_at_most_4(const PlanarGraph& g);

bool is_three_connected(const PlanarGraph& g);

// True when g - {u,v} is still 3-connected. Requires g 3-connected.
bool three_connected_without_edge(const PlanarGraph& g, Vertex u, Vertex v);

// Number of connected components of g minus the vertices in `removed`.
int component_count(const PlanarGraph& g, const VertexSet& removed);

// Component label per vertex of g - removed (-1 for removed vertices).
std::vector<int> component_labels(const PlanarGraph& g, const VertexSet& removed);

PlanarGraph remove_edge(const PlanarGraph& g, Vertex u, Vertex v);

// Splits face f by the chord {a, b}.
PlanarGraph insert_edge_in_face(const PlanarGraph& g, const Face& f, Vertex a, Vertex b);

// Adds a new vertex (index n) inside f, joined to every boundary vertex of f.
PlanarGraph insert_vertex_in_face(const PlanarGraph& g, const Face& f);

// Reverses every rotation.
PlanarGraph mirror(const PlanarGraph& g);

// Applies perm (old index -> new index) to the vertex labels.
PlanarGraph relabel(const PlanarGraph& g, std::span<const Vertex> perm);

// Deletes the vertices in `drop` and renumbers the survivors in increasing order.
// `kept` receives new index -> old index.
PlanarGraph induced_subgraph(const PlanarGraph& g, const VertexSet& drop,
                             std::vector<Vertex>* kept = nullptr);

// Isomorphism-invariant code of the embedding up to relabelling, rotation and
// reflection. Minimum over breadth-first codes from every admissible root dart.
std::string canonical_code(const PlanarGraph& g);

}  // namespace polycut
