#include "latknot/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace latknot {

namespace {

using Json = nlohmann::ordered_json;

std::pair<std::size_t, std::size_t> line_column(std::string_view text, std::size_t offset) {
  std::size_t line = 1;
  std::size_t column = 1;
  for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

Coord json_integer(const Json& j, const std::string& what) {
  if (!j.is_number_integer()) throw ParseError(what + " must be an integer");
  return j.get<Coord>();
}

const Json& member(const Json& obj, const char* key) {
  auto it = obj.find(key);
  if (it == obj.end()) throw ParseError(std::string("missing field '") + key + "'");
  return *it;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

}  // namespace

ParseError::ParseError(const std::string& message, std::optional<std::size_t> line, std::optional<std::size_t> column)
    : std::runtime_error(line ? "line " + std::to_string(*line) + ", column " + std::to_string(column.value_or(1)) +
                                    ": " + message
                              : message),
      line_(line),
      column_(column) {}

std::string tabulation_to_json(const Tabulation& tab) {
  Json j;
  Json types = Json::array();
  for (const auto& t : tab.types) types.push_back(to_string(t));
  j["types"] = std::move(types);
  Json lengths = Json::object();
  for (Axis a : kAxes) lengths[std::string(1, axis_name(a))] = tab.column(a);
  j["lengths"] = std::move(lengths);
  j["origin"] = {tab.origin.x, tab.origin.y, tab.origin.z};
  return j.dump() + "\n";
}

Tabulation tabulation_from_json(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    // byte is one past the offending character.
    const auto [line, column] = line_column(text, e.byte > 0 ? e.byte - 1 : 0);
    std::string what = e.what();
    if (auto pos = what.find("parse error"); pos != std::string::npos) what = what.substr(pos);
    throw ParseError(what, line, column);
  }
  if (!j.is_object()) throw ParseError("tabulation must be a JSON object");

  Tabulation tab;
  const Json& types = member(j, "types");
  if (!types.is_array()) throw ParseError("'types' must be an array");
  for (const auto& t : types) {
    if (!t.is_string()) throw ParseError("stick types must be strings");
    try {
      tab.types.push_back(parse_direction(t.get<std::string>()));
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what());
    }
  }
  const Json& lengths = member(j, "lengths");
  if (!lengths.is_object()) throw ParseError("'lengths' must be an object");
  for (Axis a : kAxes) {
    const std::string name(1, axis_name(a));
    auto it = lengths.find(name);
    if (it == lengths.end()) continue;  // an axis without sticks may be omitted
    if (!it->is_array()) throw ParseError("'lengths." + name + "' must be an array");
    for (const auto& v : *it) tab.column(a).push_back(json_integer(v, "lengths." + name + " entries"));
  }
  if (auto it = j.find("origin"); it != j.end()) {
    if (!it->is_array() || it->size() != 3) throw ParseError("'origin' must be an array of three integers");
    tab.origin = {json_integer((*it)[0], "origin"), json_integer((*it)[1], "origin"), json_integer((*it)[2], "origin")};
  }
  return tab;
}

std::string knot_to_csv(const LatticeKnot& knot) {
  std::ostringstream out;
  out << "x,y,z,critical\n";
  for (std::size_t i = 0; i < knot.edge_length(); ++i) {
    const auto& v = knot.vertex(i);
    out << v.x << ',' << v.y << ',' << v.z << ',' << (knot.is_critical(i) ? 1 : 0) << '\n';
  }
  return out.str();
}

std::vector<LatticePoint> vertices_from_csv(std::string_view text) {
  std::vector<LatticePoint> out;
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    const auto nl = text.find('\n');
    std::string_view line = trim(text.substr(0, nl));
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    if (line.empty() || line.front() == '#') continue;

    std::vector<std::string_view> fields;
    std::vector<std::size_t> columns;
    std::size_t pos = 0;
    while (true) {
      const auto comma = line.find(',', pos);
      columns.push_back(pos + 1);
      fields.push_back(trim(line.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos)));
      if (comma == std::string_view::npos) break;
      pos = comma + 1;
    }
    if (out.empty() && fields.size() >= 3 && fields[0] == "x" && fields[1] == "y" && fields[2] == "z") continue;
    if (fields.size() != 3 && fields.size() != 4) {
      throw ParseError("expected 3 or 4 comma-separated fields, found " + std::to_string(fields.size()), line_no, 1);
    }
    Coord c[3];
    for (int k = 0; k < 3; ++k) {
      const auto f = fields[static_cast<std::size_t>(k)];
      const auto [ptr, ec] = std::from_chars(f.data(), f.data() + f.size(), c[k]);
      if (f.empty() || ec != std::errc{} || ptr != f.data() + f.size()) {
        throw ParseError("invalid integer '" + std::string(f) + "'", line_no, columns[static_cast<std::size_t>(k)]);
      }
    }
    out.push_back({c[0], c[1], c[2]});
  }
  if (out.empty()) throw ParseError("no vertices", line_no == 0 ? 1 : line_no, 1);
  return out;
}

std::string knot_to_obj(const LatticeKnot& knot) {
  std::ostringstream out;
  for (const auto& v : knot.vertices()) out << "v " << v.x << ' ' << v.y << ' ' << v.z << '\n';
  out << 'l';
  for (std::size_t i = 1; i <= knot.edge_length(); ++i) out << ' ' << i;
  out << " 1\n";
  return out.str();
}

std::string knot_to_json(const LatticeKnot& knot) { return tabulation_to_json(knot.canonical_tabulation()); }

KnotInput parse_knot_input(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) throw ParseError("empty input", 1, 1);
  KnotInput input;
  if (text[first] == '{') {
    input.tabulation = tabulation_from_json(text);
  } else {
    input.vertices = vertices_from_csv(text);
  }
  return input;
}

LatticeKnot build_knot(const KnotInput& input) {
  if (input.tabulation) return build_knot(*input.tabulation);
  return knot_from_vertices(input.vertices);
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << text;
  if (!out) throw std::runtime_error("write failed for " + path.string());
}

}  // namespace latknot
