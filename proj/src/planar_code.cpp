#include "polycut/planar_code.hpp"

#include <sstream>
#include <string>

namespace polycut {

namespace {

std::string at(std::uint64_t offset) { return " at byte " + std::to_string(offset); }

}  // namespace

PlanarCodeReader::PlanarCodeReader(std::istream& in) : in_(in) {}

int PlanarCodeReader::get() {
  const int c = in_.get();
  if (c != std::char_traits<char>::eof()) ++offset_;
  return c == std::char_traits<char>::eof() ? -1 : c;
}

std::optional<PlanarGraph> PlanarCodeReader::next() {
  if (!header_read_) {
    for (char expected : kPlanarCodeHeader) {
      const std::uint64_t pos = offset_;
      const int c = get();
      if (c != static_cast<unsigned char>(expected))
        throw Error(ErrorCode::BadHeader, "missing \">>planar_code<<\" header" + at(pos));
    }
    header_read_ = true;
  }
  const std::uint64_t start = offset_;
  const int n = get();
  if (n < 0) return std::nullopt;
  if (n == 0)
    throw Error(ErrorCode::BadHeader, "vertex count 0 (two-byte planar_code is not supported)" + at(start));

  std::vector<std::vector<Vertex>> rot(n);
  for (Vertex v = 0; v < n; ++v) {
    while (true) {
      const std::uint64_t pos = offset_;
      const int c = get();
      if (c < 0)
        throw Error(ErrorCode::TruncatedGraph,
                    "graph starting" + at(start) + " ends inside vertex " + std::to_string(v + 1) + at(pos));
      if (c == 0) break;
      if (c > n)
        throw Error(ErrorCode::InvalidNeighbor,
                    "neighbour " + std::to_string(c) + " of vertex " + std::to_string(v + 1) + " exceeds n = " +
                        std::to_string(n) + at(pos));
      rot[v].push_back(c - 1);
    }
  }
  return PlanarGraph::build(rot);
}

std::vector<PlanarGraph> read_planar_code(std::istream& in) {
  PlanarCodeReader reader(in);
  std::vector<PlanarGraph> out;
  while (auto g = reader.next()) out.push_back(std::move(*g));
  return out;
}

std::vector<PlanarGraph> read_planar_code(std::span<const std::uint8_t> bytes) {
  std::istringstream in(std::string(bytes.begin(), bytes.end()));
  return read_planar_code(in);
}

void write_planar_code(std::ostream& out, std::span<const PlanarGraph> graphs, bool with_header) {
  if (with_header) out << kPlanarCodeHeader;
  for (const PlanarGraph& g : graphs) {
    if (g.vertex_count() > kMaxVertices)
      throw Error(ErrorCode::TooManyVertices, std::to_string(g.vertex_count()) + " vertices");
    out.put(static_cast<char>(g.vertex_count()));
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
      for (Vertex w : g.rotation(v)) out.put(static_cast<char>(w + 1));
      out.put('\0');
    }
  }
}

std::vector<std::uint8_t> write_planar_code(std::span<const PlanarGraph> graphs) {
  std::ostringstream out;
  write_planar_code(out, graphs);
  const std::string s = out.str();
  return {s.begin(), s.end()};
}

}  // namespace polycut
