#include <array>
#include <cstdint>
#include <string>

#include "polycut/embed.hpp"

namespace polycut {

namespace {

// Breadth-first code from one root dart. Each vertex, in order of labelling,
// contributes the labels of its neighbours read from the dart it was first
// reached by (the root dart for the root), clockwise for dir = +1 and
// counterclockwise for dir = -1, followed by a 0.
class CodeBuilder {
 public:
  explicit CodeBuilder(const PlanarGraph& g) : g_(g) {
    code_.reserve(2 * g.edge_count() + g.vertex_count() + 1);
  }

  // Encodes from `root` and keeps the result when it is smaller than `best`.
  // Returns true if `best` was replaced.
  bool try_root(int root, int dir, std::string& best) {
    const int n = g_.vertex_count();
    label_.fill(0);
    code_.clear();
    code_.push_back(static_cast<char>(n));
    int cmp = best.empty() ? -1 : 0;  // -1: already smaller than best

    Vertex order[kMaxVertices + 1];
    int entry[kMaxVertices + 1];
    int labelled = 0;
    const Vertex r = g_.tail(root);
    label_[r] = 1;
    order[labelled] = r;
    entry[labelled] = root - g_.dart(r, 0);
    ++labelled;

    for (int k = 0; k < labelled; ++k) {
      const Vertex x = order[k];
      const auto rot = g_.rotation(x);
      const int deg = static_cast<int>(rot.size());
      int pos = entry[k];
      for (int j = 0; j < deg; ++j) {
        const Vertex y = rot[pos];
        if (label_[y] == 0) {
          label_[y] = static_cast<std::uint8_t>(labelled + 1);
          order[labelled] = y;
          entry[labelled] = g_.twin(g_.dart(x, pos)) - g_.dart(y, 0);
          ++labelled;
        }
        if (!emit(label_[y], cmp, best)) return false;
        pos += dir;
        if (pos == deg) pos = 0;
        if (pos < 0) pos = deg - 1;
      }
      if (!emit(0, cmp, best)) return false;
    }
    if (cmp < 0) {
      best = code_;
      return true;
    }
    return false;
  }

 private:
  bool emit(std::uint8_t symbol, int& cmp, const std::string& best) {
    if (cmp == 0) {
      const auto b = static_cast<std::uint8_t>(best[code_.size()]);
      if (symbol > b) return false;
      if (symbol < b) cmp = -1;
    }
    code_.push_back(static_cast<char>(symbol));
    return true;
  }

  const PlanarGraph& g_;
  std::array<std::uint8_t, kMaxVertices + 1> label_{};
  std::string code_;
};

}  // namespace

std::string canonical_code(const PlanarGraph& g) {
  // Roots are restricted to darts whose (tail degree, head degree) is
  // lexicographically least; that set is invariant under isomorphism.
  int best_key = 1 << 30;
  for (int d = 0; d < g.dart_count(); ++d) {
    const int key = g.degree(g.tail(d)) * 256 + g.degree(g.head(d));
    if (key < best_key) best_key = key;
  }
  std::string best;
  CodeBuilder builder(g);
  if (g.dart_count() == 0) return std::string(1, static_cast<char>(g.vertex_count()));
  for (int d = 0; d < g.dart_count(); ++d) {
    if (g.degree(g.tail(d)) * 256 + g.degree(g.head(d)) != best_key) continue;
    builder.try_root(d, +1, best);
    builder.try_root(d, -1, best);
  }
  return best;
}

}  // namespace polycut
