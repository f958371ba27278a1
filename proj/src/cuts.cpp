#include "polycut/cuts.hpp"

#include <algorithm>
#include <stdexcept>

#include "kernels.hpp"

namespace polycut {

Triple make_triple(Vertex a, Vertex b, Vertex c) {
  Triple t{a, b, c};
  std::sort(t.begin(), t.end());
  return t;
}

int CutReport::trivial_count() const {
  return static_cast<int>(std::count(trivial_flags.begin(), trivial_flags.end(), true));
}

CofacialState::CofacialState(int n)
    : n_(n), share_(n), pairs_(static_cast<std::size_t>(n) * n) {}

void CofacialState::add_face(const VertexSet& face) {
  for (Vertex a : face) {
    share_[a] |= face;
    for (Vertex b : face) pairs_[a * n_ + b] |= face;
  }
}

void CofacialState::merge_face(const VertexSet& face) {
  add_face(face);
  newface_ = face;
}

CofacialState cofacial_build(const PlanarGraph& g) {
  CofacialState st(g.vertex_count());
  for (const Face& f : faces(g)) {
    VertexSet s;
    for (Vertex v : f.boundary) s.set(v);
    st.add_face(s);
  }
  return st;
}

namespace {

void require_three_connected(const PlanarGraph& g) {
  if (!is_three_connected(g))
    throw Error(ErrorCode::NotThreeConnected, "3-cut enumeration needs a polyhedron");
}

VertexSet as_set(const Triple& t) { return VertexSet{t[0], t[1], t[2]}; }

}  // namespace

CutReport enumerate_3cuts(const PlanarGraph& g, const CofacialState& st) {
  require_three_connected(g);
  CutReport report;
  const int n = g.vertex_count();
  for (Vertex u = 0; u < n; ++u) {
    const VertexSet above_u = st.share(u) - VertexSet::range(u + 1);
    for (Vertex v : above_u) {
      // w > v sharing a face with both, but not a face with both at once.
      VertexSet ws = st.share(u) & st.share(v);
      ws -= VertexSet::range(v + 1);
      ws -= st.cofacial(u, v);
      for (Vertex w : ws) report.cuts.push_back({u, v, w});
    }
  }
  return report;
}

CutReport enumerate_3cuts(const PlanarGraph& g) { return enumerate_3cuts(g, cofacial_build(g)); }

CutReport enumerate_3cuts_brute(const PlanarGraph& g) {
  CutReport report;
  const int n = g.vertex_count();
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = a + 1; b < n; ++b)
      for (Vertex c = b + 1; c < n; ++c)
        if (component_count(g, VertexSet{a, b, c}) >= 2) report.cuts.push_back({a, b, c});
  return report;
}

VertexSet merged_face(const PlanarGraph& g_before, Edge removed) {
  VertexSet s;
  for (Vertex x : face_of(g_before, removed.u, removed.v).boundary) s.set(x);
  for (Vertex x : face_of(g_before, removed.v, removed.u).boundary) s.set(x);
  return s;
}

CutReport incremental_recount(const CofacialState& st, const PlanarGraph& g_before, Edge removed,
                              const CutReport& prior, std::vector<Triple>* reappeared) {
  VertexSet f1, f2;
  for (Vertex x : face_of(g_before, removed.u, removed.v).boundary) f1.set(x);
  for (Vertex x : face_of(g_before, removed.v, removed.u).boundary) f2.set(x);
  const VertexSet newface = f1 | f2;
  const VertexSet side1 = f1 - f2;
  const VertexSet side2 = f2 - f1;

  std::vector<Triple> fresh;
  for (Vertex a : side1) {
    for (Vertex b : side2) {
      // popcount filter, then the full test: the triple must not be facial.
      VertexSet cand = st.share(a) & st.share(b);
      cand -= newface;
      if (cand.empty()) continue;
      cand -= st.cofacial(a, b);
      for (Vertex x : cand) fresh.push_back(make_triple(a, b, x));
    }
  }
  std::sort(fresh.begin(), fresh.end());

  CutReport out;
  out.cuts.reserve(prior.cuts.size() + fresh.size());
  auto p = prior.cuts.begin();
  for (const Triple& t : fresh) {
    while (p != prior.cuts.end() && *p < t) out.cuts.push_back(*p++);
    if (p != prior.cuts.end() && *p == t) {
      if (reappeared) reappeared->push_back(t);
      continue;
    }
    out.cuts.push_back(t);
  }
  out.cuts.insert(out.cuts.end(), p, prior.cuts.end());
  return out;
}

CutReport classify(const PlanarGraph& g, CutReport report) {
  report.trivial_flags.assign(report.cuts.size(), false);
  for (std::size_t i = 0; i < report.cuts.size(); ++i) {
    const VertexSet cut = as_set(report.cuts[i]);
    const VertexSet candidates = (g.neighbors(report.cuts[i][0]) & g.neighbors(report.cuts[i][1]) &
                                  g.neighbors(report.cuts[i][2])) -
                                 cut;
    for (Vertex x : candidates) {
      if (g.degree(x) == 3) {
        report.trivial_flags[i] = true;
        break;
      }
    }
  }
  report.essentially_4_connected =
      std::all_of(report.trivial_flags.begin(), report.trivial_flags.end(), [](bool b) { return b; });
  return report;
}

namespace {

// Splits the face boundary at p and q into the two open arcs between them.
bool separating_arcs(const Face& f, Vertex p, Vertex q, const std::vector<int>& label) {
  const int k = f.length();
  int ip = -1, iq = -1;
  for (int i = 0; i < k; ++i) {
    if (f.boundary[i] == p) ip = i;
    if (f.boundary[i] == q) iq = i;
  }
  if (ip < 0 || iq < 0) return false;
  auto arc_label = [&](int from, int to) {
    int l = -2;
    for (int i = (from + 1) % k; i != to; i = (i + 1) % k) {
      const int li = label[f.boundary[i]];
      if (li < 0 || (l != -2 && li != l)) return -1;
      l = li;
    }
    return l == -2 ? -1 : l;
  };
  const int l1 = arc_label(ip, iq);
  const int l2 = arc_label(iq, ip);
  return l1 >= 0 && l2 >= 0 && l1 != l2;
}

}  // namespace

Decomposition edge_closed_components(const PlanarGraph& g, const Triple& cut) {
  const VertexSet cut_set = as_set(cut);
  const std::vector<int> label = component_labels(g, cut_set);
  const int comps = *std::max_element(label.begin(), label.end()) + 1;
  if (comps != 2)
    throw Error(ErrorCode::NotACut, "G - {" + std::to_string(cut[0]) + "," + std::to_string(cut[1]) +
                                        "," + std::to_string(cut[2]) + "} has " +
                                        std::to_string(comps) + " components");

  Decomposition dec;
  dec.cut = cut;
  PlanarGraph closed = g;
  const std::array<std::pair<int, int>, 3> pairs{{{0, 1}, {1, 2}, {0, 2}}};
  for (auto [i, j] : pairs) {
    const Vertex p = cut[i], q = cut[j];
    if (closed.adjacent(p, q)) continue;
    bool inserted = false;
    for (const Face& f : faces(closed)) {
      if (separating_arcs(f, p, q, label)) {
        closed = insert_edge_in_face(closed, f, p, q);
        inserted = true;
        break;
      }
    }
    if (!inserted)
      throw Error(ErrorCode::NotThreeConnected, "no face separates the components at the cut");
    dec.added_parent_edges.push_back(Edge::of(p, q));
  }

  for (int part = 0; part < 2; ++part) {
    VertexSet drop;
    for (Vertex v = 0; v < g.vertex_count(); ++v)
      if (label[v] >= 0 && label[v] != part) drop.set(v);
    dec.parts[part] = induced_subgraph(closed, drop, &dec.vertex_maps[part]);
    const auto& map = dec.vertex_maps[part];
    auto local = [&](Vertex x) {
      return static_cast<Vertex>(std::find(map.begin(), map.end(), x) - map.begin());
    };
    for (const Edge& e : dec.added_parent_edges)
      dec.added_edges[part].push_back(Edge::of(local(e.u), local(e.v)));
  }
  return dec;
}

PlanarGraph reassemble(const Decomposition& dec) {
  const auto& map0 = dec.vertex_maps[0];
  const auto& map1 = dec.vertex_maps[1];
  int n = 0;
  for (Vertex v : map0) n = std::max(n, v + 1);
  for (Vertex v : map1) n = std::max(n, v + 1);

  std::vector<std::vector<Vertex>> rot(n);
  std::array<std::vector<std::vector<Vertex>>, 2> local;
  for (int part = 0; part < 2; ++part) {
    const auto& map = dec.vertex_maps[part];
    const PlanarGraph& pg = dec.parts[part];
    local[part].resize(n);
    for (Vertex x = 0; x < pg.vertex_count(); ++x)
      for (Vertex y : pg.rotation(x)) local[part][map[x]].push_back(map[y]);
  }
  const VertexSet cut = as_set(dec.cut);
  for (Vertex v = 0; v < n; ++v) {
    if (!cut.test(v)) {
      rot[v] = local[0][v].empty() ? local[1][v] : local[0][v];
      continue;
    }
    // Read each part's rotation starting just after its corner on the cut triangle.
    std::array<std::vector<Vertex>, 2> arcs;
    for (int part = 0; part < 2; ++part) {
      const auto& r = local[part][v];
      const int k = static_cast<int>(r.size());
      for (int i = 0; i < k; ++i) {
        const Vertex a = r[i], b = r[(i + 1) % k];
        if (cut.test(a) && cut.test(b)) {
          for (int j = 1; j <= k; ++j) arcs[part].push_back(r[(i + j) % k]);
          break;
        }
      }
    }
    const auto& a0 = arcs[0];
    const auto& a1 = arcs[1];
    if (a0.empty() || a1.empty() || a0.front() != a1.back() || a0.back() != a1.front())
      throw std::logic_error("decomposition parts disagree at the cut");
    rot[v] = a0;
    rot[v].insert(rot[v].end(), a1.begin() + 1, a1.end() - 1);
  }
  for (const Edge& e : dec.added_parent_edges) {
    std::erase(rot[e.u], e.v);
    std::erase(rot[e.v], e.u);
  }
  return PlanarGraph::build(rot);
}

CleanCut find_clean_cut(const PlanarGraph& g) {
  const CutReport report = enumerate_3cuts(g);
  if (report.cuts.empty()) throw Error(ErrorCode::NoCuts, "graph has no 3-cuts");
  CleanCut best;
  int best_size = g.vertex_count() + 1;
  for (const Triple& t : report.cuts) {
    const std::vector<int> label = component_labels(g, as_set(t));
    const int size0 = static_cast<int>(std::count(label.begin(), label.end(), 0));
    const int size1 = static_cast<int>(std::count(label.begin(), label.end(), 1));
    const int smaller = std::min(size0, size1);
    if (smaller < best_size) {
      best_size = smaller;
      best.cut = t;
      best.part_index = size0 <= size1 ? 0 : 1;
    }
  }
  return best;
}

}  // namespace polycut
