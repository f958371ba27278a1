#pragma once

#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>
#include <span>
#include <string_view>
#include <vector>

#include "polycut/embed.hpp"

namespace polycut {

// plantri planar_code, one-byte variant:
//   ">>planar_code<<"  then per graph  n, and for each vertex its neighbours
//   (1-based, clockwise) followed by 0.
inline constexpr std::string_view kPlanarCodeHeader = ">>planar_code<<";

// Streaming decoder. Errors carry the byte offset of the offending byte.
class PlanarCodeReader {
 public:
  explicit PlanarCodeReader(std::istream& in);

  // Next graph, or nothing at end of input.
  std::optional<PlanarGraph> next();
  std::uint64_t offset() const { return offset_; }

 private:
  int get();

  std::istream& in_;
  std::uint64_t offset_ = 0;
  bool header_read_ = false;
};

std::vector<PlanarGraph> read_planar_code(std::span<const std::uint8_t> bytes);
std::vector<PlanarGraph> read_planar_code(std::istream& in);

std::vector<std::uint8_t> write_planar_code(std::span<const PlanarGraph> graphs);
void write_planar_code(std::ostream& out, std::span<const PlanarGraph> graphs, bool with_header = true);

}  // namespace polycut
