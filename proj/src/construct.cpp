#include "polycut/construct.hpp"

#include <stdexcept>

namespace polycut {

PlanarGraph k4() { return PlanarGraph::build({{1, 2, 3}, {0, 3, 2}, {0, 1, 3}, {0, 2, 1}}); }

PlanarGraph cube() {
  return PlanarGraph::build(
      {{4, 1, 2}, {3, 0, 5}, {6, 0, 3}, {2, 1, 7}, {0, 6, 5}, {1, 4, 7}, {4, 2, 7}, {5, 6, 3}});
}

PlanarGraph octahedron() { return double_wheel(6); }

PlanarGraph herschel() {
  return PlanarGraph::build({{1, 4, 3},
                             {0, 2, 6, 5},
                             {1, 3, 7},
                             {2, 0, 9, 8},
                             {5, 9, 0},
                             {10, 4, 1},
                             {7, 10, 1},
                             {8, 6, 2},
                             {3, 10, 7},
                             {4, 10, 3},
                             {6, 8, 9, 5}});
}

PlanarGraph stacked_k4() { return stack_vertex(k4(), faces(k4()).front()); }

PlanarGraph double_wheel(int n) {
  if (n < 6) throw Error(ErrorCode::TooSmall, "double wheel needs n >= 6");
  if (n > kMaxVertices) throw Error(ErrorCode::TooManyVertices, "double wheel n > 255");
  const int k = n - 2;
  const Vertex north = k, south = k + 1;
  std::vector<std::vector<Vertex>> rot(n);
  for (Vertex i = 0; i < k; ++i) rot[i] = {(i + 1) % k, north, (i + k - 1) % k, south};
  for (Vertex i = 0; i < k; ++i) {
    rot[north].push_back(i);
    rot[south].push_back(k - 1 - i);
  }
  return PlanarGraph::build(rot);
}

PlanarGraph stack_vertex(const PlanarGraph& t, const Face& f) {
  if (f.length() != 3) throw Error(ErrorCode::NotTriangle, "face has length " + std::to_string(f.length()));
  return insert_vertex_in_face(t, f);
}

PlanarGraph non_traceable_family(int d) {
  if (d < 8 || d % 2 != 0) throw Error(ErrorCode::OddOrSmall, "d must be even and >= 8, got " + std::to_string(d));
  const PlanarGraph base = double_wheel(d / 2 + 2);
  PlanarGraph g = base;
  for (const Face& f : faces(base)) g = stack_vertex(g, f);
  return g;
}

namespace {

// Face of g through u and v whose two open boundary arcs lie in different
// components (component labels of the cut).
std::optional<Face> face_between(const PlanarGraph& g, Vertex u, Vertex v, const std::vector<int>& label) {
  for (const Face& f : faces(g)) {
    const int k = f.length();
    int iu = -1, iv = -1;
    for (int i = 0; i < k; ++i) {
      if (f.boundary[i] == u) iu = i;
      if (f.boundary[i] == v) iv = i;
    }
    if (iu < 0 || iv < 0) continue;
    auto arc = [&](int from, int to) {
      int l = -2;
      for (int i = (from + 1) % k; i != to; i = (i + 1) % k) {
        const Vertex x = f.boundary[i];
        const int lx = x < static_cast<int>(label.size()) ? label[x] : -1;
        if (lx < 0 || (l != -2 && lx != l)) return -1;
        l = lx;
      }
      return l == -2 ? -1 : l;
    };
    const int a = arc(iu, iv), b = arc(iv, iu);
    if (a >= 0 && b >= 0 && a != b) return f;
  }
  return std::nullopt;
}

}  // namespace

LiftResult lift_to_4connected(const PlanarGraph& g) {
  LiftResult out;
  out.graph = g;
  while (true) {
    const CutReport report = enumerate_3cuts(out.graph);
    out.cut_counts.push_back(report.count());
    if (report.cuts.empty()) break;
    if (out.cut_counts.size() >= 2 && out.cut_counts.back() >= out.cut_counts[out.cut_counts.size() - 2])
      throw std::logic_error("apex step did not reduce the number of 3-cuts");

    const Triple cut = report.cuts.front();
    const std::vector<int> label = component_labels(out.graph, VertexSet{cut[0], cut[1], cut[2]});
    Vertex u = cut[0], v = cut[1];
    if (out.graph.adjacent(u, v)) {
      if (!out.graph.adjacent(cut[1], cut[2])) {
        u = cut[1];
        v = cut[2];
      } else if (!out.graph.adjacent(cut[0], cut[2])) {
        v = cut[2];
      }
    }
    PlanarGraph base = out.graph;
    if (base.adjacent(u, v)) {
      base = remove_edge(base, u, v);
      out.deleted_edges.push_back(Edge::of(u, v));
    }
    const std::optional<Face> f = face_between(base, u, v, label);
    if (!f) throw std::logic_error("no face separates the sides of the 3-cut");
    out.added.set(base.vertex_count());
    out.graph = insert_vertex_in_face(base, *f);
  }
  return out;
}

}  // namespace polycut
