// Serialization: tabulation JSON (the interchange format), vertex CSV with
// critical flags, and OBJ polylines. All writers are byte-stable.
#pragma once

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "latknot/knot.hpp"

namespace latknot {

/// Malformed input. Syntax errors carry a 1-based line and column.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::optional<std::size_t> line = std::nullopt,
             std::optional<std::size_t> column = std::nullopt);

  const std::optional<std::size_t>& line() const { return line_; }
  const std::optional<std::size_t>& column() const { return column_; }

 private:
  std::optional<std::size_t> line_;
  std::optional<std::size_t> column_;
};

/// {"types":[...],"lengths":{"x":[...],"y":[...],"z":[...]},"origin":[x,y,z]}
/// on one line, followed by a newline.
std::string tabulation_to_json(const Tabulation& tab);
/// Structural parse only; lengths are checked by build_knot.
Tabulation tabulation_from_json(std::string_view text);

/// Header "x,y,z,critical", then one row per vertex in cyclic order.
std::string knot_to_csv(const LatticeKnot& knot);
/// Rows of "x,y,z" with an optional trailing critical column (ignored) and
/// an optional header line.
std::vector<LatticePoint> vertices_from_csv(std::string_view text);

/// "v x y z" per vertex, then a single closed "l 1 2 ... n 1" element.
std::string knot_to_obj(const LatticeKnot& knot);
/// Canonical tabulation as JSON.
std::string knot_to_json(const LatticeKnot& knot);

/// A parsed knot file: a tabulation (JSON) or a vertex cycle (CSV).
struct KnotInput {
  std::optional<Tabulation> tabulation;
  std::vector<LatticePoint> vertices;
};

/// JSON if the first non-blank character is '{', CSV otherwise.
KnotInput parse_knot_input(std::string_view text);
/// Throws KnotError when the input does not describe a lattice knot.
LatticeKnot build_knot(const KnotInput& input);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view text);

}  // namespace latknot
