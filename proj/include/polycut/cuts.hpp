#pragma once

#include <array>
#include <optional>
#include <vector>

#include "polycut/embed.hpp"

namespace polycut {

// Sorted vertex triple.
using Triple = std::array<Vertex, 3>;

Triple make_triple(Vertex a, Vertex b, Vertex c);

// Face-sharing relation of an embedding, kept up to date while edges are removed.
//
// share[v] is the set of vertices that lie on a common face with v, v included. Facial
// triples are stored per pair: cofacial(a, b) is the union of the boundaries of
// all faces containing both a and b, so {a, b, c} is a facial triple exactly when
// c is in cofacial(a, b).
class CofacialState {
 public:
  CofacialState() = default;
  explicit CofacialState(int n);

  int vertex_count() const { return n_; }
  const VertexSet& share(Vertex v) const { return share_[v]; }
  const VertexSet& cofacial(Vertex a, Vertex b) const { return pairs_[a * n_ + b]; }
  bool facial_triple(Vertex a, Vertex b, Vertex c) const { return cofacial(a, b).test(c); }
  // Vertices of the most recently merged face.
  const VertexSet& newface() const { return newface_; }

  // Records that all vertices of `face` now share a face.
  void add_face(const VertexSet& face);
  // add_face plus remembering `face` as the newest merged face.
  void merge_face(const VertexSet& face);

  friend bool operator==(const CofacialState&, const CofacialState&) = default;

 private:
  int n_ = 0;
  std::vector<VertexSet> share_;
  std::vector<VertexSet> pairs_;
  VertexSet newface_;
};

struct CutReport {
  std::vector<Triple> cuts;        // sorted lexicographically
  std::vector<bool> trivial_flags;  // filled by classify()
  bool essentially_4_connected = false;

  int count() const { return static_cast<int>(cuts.size()); }
  int trivial_count() const;
};

struct Decomposition {
  Triple cut{};
  std::array<PlanarGraph, 2> parts;
  // part vertex -> parent vertex
  std::array<std::vector<Vertex>, 2> vertex_maps;
  // Triangle edges inserted per part, in part coordinates.
  std::array<std::vector<Edge>, 2> added_edges;
  // Same edges in parent coordinates; they are shared by both parts.
  std::vector<Edge> added_parent_edges;
};

CofacialState cofacial_build(const PlanarGraph& g);

// 3-cuts by the face-sharing criterion: {u,v,w} is a 3-cut of a polyhedron iff
// every two of them share a face but the three do not.
CutReport enumerate_3cuts(const PlanarGraph& g, const CofacialState& st);
CutReport enumerate_3cuts(const PlanarGraph& g);

// Cuts by deleting every triple and testing connectivity.
CutReport enumerate_3cuts_brute(const PlanarGraph& g);

// Report for g_before - removed, given `prior` for g_before and `st` built for
// g_before. Only triples with one vertex on each side of the merged face and
// the third off it can be new.
//
// `reappeared`, when given, receives candidate triples that were already in
// `prior` (should never happen for polyhedra).
CutReport incremental_recount(const CofacialState& st, const PlanarGraph& g_before, Edge removed,
                              const CutReport& prior, std::vector<Triple>* reappeared = nullptr);

// Vertices of the face formed by merging the two faces on either side of uv.
VertexSet merged_face(const PlanarGraph& g_before, Edge removed);

// Fills trivial flags and the essentially-4-connected flag.
CutReport classify(const PlanarGraph& g, CutReport report);

// Edge closed components at a verified 3-cut. Part 0 holds the component of
// G - cut that contains the smallest non-cut vertex.
Decomposition edge_closed_components(const PlanarGraph& g, const Triple& cut);

// Glues the parts along the cut triangle and drops inserted triangle edges.
PlanarGraph reassemble(const Decomposition& dec);

struct CleanCut {
  Triple cut{};
  int part_index = 0;  // index into edge_closed_components(g, cut).parts
};

// A cut one of whose edge closed components has no 3-cuts: the cut with the
// smallest component, lexicographically least among ties.
CleanCut find_clean_cut(const PlanarGraph& g);

}  // namespace polycut
