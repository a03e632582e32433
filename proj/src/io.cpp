#include "simtri/io.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <sstream>
#include <vector>

#include "json.hpp"
#include "simtri/error.hpp"

namespace simtri {
namespace {

using ordered_json = nlohmann::ordered_json;

struct Line {
  std::size_t number;
  std::string text;
};

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<Line> content_lines(std::istream& in) {
  std::vector<Line> out;
  std::string raw;
  std::size_t number = 0;
  while (std::getline(in, raw)) {
    ++number;
    const auto text = trim(raw);
    if (text.empty() || text.front() == '#') continue;
    out.push_back({number, std::string(text)});
  }
  return out;
}

// Whitespace-separated tokens; '<' is split off as its own token.
std::vector<std::string> tokens(const std::string& text) {
  std::string spaced;
  for (char c : text) {
    if (c == '<') {
      spaced += " < ";
    } else {
      spaced += c;
    }
  }
  std::istringstream in(spaced);
  std::vector<std::string> out;
  for (std::string token; in >> token;) out.push_back(token);
  return out;
}

long long parse_integer(std::string_view token, std::size_t line) {
  long long value = 0;
  const auto* end = token.data() + token.size();
  const auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (ec != std::errc() || ptr != end) {
    throw ParseError(line, "expected an integer, got '" + std::string(token) + "'");
  }
  return value;
}

std::size_t parse_count(const std::vector<Line>& lines) {
  if (lines.empty()) throw ParseError(0, "missing vertex count");
  const auto parts = tokens(lines.front().text);
  if (parts.size() != 1) throw ParseError(lines.front().number, "first line must hold only the element count");
  const long long n = parse_integer(parts.front(), lines.front().number);
  if (n < 0) throw ParseError(lines.front().number, "element count must be non-negative");
  return static_cast<std::size_t>(n);
}

Vertex parse_element(const std::string& token, std::size_t n, std::size_t line) {
  const long long value = parse_integer(token, line);
  if (value < 0 || static_cast<std::size_t>(value) >= n) {
    throw ParseError(line, "element " + token + " is outside 0.." + std::to_string(n) + "-1");
  }
  return static_cast<Vertex>(value);
}

int json_int(const ordered_json& value, const char* what) {
  if (!value.is_number_integer()) throw ParseError(0, std::string(what) + " must be an integer");
  return value.get<int>();
}

}  // namespace

Graph parse_graph(std::istream& in) {
  const auto lines = content_lines(in);
  const std::size_t n = parse_count(lines);
  Graph graph(n);
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto& line = lines[i];
    const auto parts = tokens(line.text);
    if (parts.size() != 2) throw ParseError(line.number, "expected 'u v'");
    const Vertex u = parse_element(parts[0], n, line.number);
    const Vertex v = parse_element(parts[1], n, line.number);
    if (u == v) throw SelfLoop(line.number, "self loop at vertex " + parts[0]);
    if (graph.adjacent(u, v)) throw DuplicateEdge(line.number, "duplicate edge " + parts[0] + " " + parts[1]);
    graph.add_edge(u, v);
  }
  return graph;
}

Graph parse_graph(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_graph(in);
}

PartialOrder parse_order(std::istream& in) {
  const auto lines = content_lines(in);
  const std::size_t n = parse_count(lines);
  std::vector<std::pair<Vertex, Vertex>> relations;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto& line = lines[i];
    const auto parts = tokens(line.text);
    if (parts.size() != 3 || parts[1] != "<") throw ParseError(line.number, "expected 'u < v'");
    relations.emplace_back(parse_element(parts[0], n, line.number), parse_element(parts[2], n, line.number));
  }
  return make_partial_order(n, relations);
}

PartialOrder parse_order(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_order(in);
}

std::string format_graph(const Graph& graph) {
  std::ostringstream out;
  out << graph.size() << '\n';
  for (const auto& [u, v] : graph.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

std::string format_order(const PartialOrder& order) {
  std::ostringstream out;
  out << order.size() << '\n';
  const auto n = static_cast<Vertex>(order.size());
  for (const auto& [u, v] : order.relations()) {
    bool cover = true;
    for (Vertex w = 0; w < n && cover; ++w) {
      if (order.less(u, w) && order.less(w, v)) cover = false;
    }
    if (cover) out << u << " < " << v << '\n';
  }
  return out.str();
}

Ordering parse_ordering(std::string_view text) {
  std::vector<Vertex> order;
  const auto body = trim(text);
  if (!body.empty()) {
    std::size_t start = 0;
    while (true) {
      const auto comma = body.find(',', start);
      const auto token = trim(body.substr(start, comma == std::string_view::npos ? body.size() - start : comma - start));
      const long long value = parse_integer(token, 1);
      order.push_back(static_cast<Vertex>(value));
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
  }
  return Ordering(std::move(order));
}

std::string emit_representation(const TriangleRepresentation& triangles, RepresentationFormat format) {
  if (format == RepresentationFormat::structured) {
    ordered_json doc;
    doc["version"] = 1;
    doc["triangles"] = ordered_json::array();
    for (std::size_t v = 0; v < triangles.size(); ++v) {
      const Triangle& t = triangles[static_cast<Vertex>(v)];
      ordered_json entry;
      entry["v"] = v;
      entry["apex"] = t.apex;
      entry["base"] = {t.base_left, t.base_right};
      doc["triangles"].push_back(std::move(entry));
    }
    return doc.dump();
  }

  // Top line L1 at y = 1 and bottom line L2 at y = 0, scaled.
  constexpr int unit = 40;
  constexpr int margin = 30;
  constexpr int height = 160;
  int low = 1;
  int high = 1;
  for (const Triangle& t : triangles.triangles()) {
    low = std::min({low, t.apex, t.base_left});
    high = std::max({high, t.apex, t.base_right});
  }
  const int width = (high - low) * unit + 2 * margin;
  auto x = [&](int coordinate) { return margin + (coordinate - low) * unit; };
  const int top = margin;
  const int bottom = margin + height;

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << bottom + margin
      << "\" viewBox=\"0 0 " << width << ' ' << bottom + margin << "\">\n";
  out << "  <line x1=\"0\" y1=\"" << top << "\" x2=\"" << width << "\" y2=\"" << top
      << "\" stroke=\"black\"/>\n";
  out << "  <line x1=\"0\" y1=\"" << bottom << "\" x2=\"" << width << "\" y2=\"" << bottom
      << "\" stroke=\"black\"/>\n";
  for (std::size_t v = 0; v < triangles.size(); ++v) {
    const Triangle& t = triangles[static_cast<Vertex>(v)];
    const int hue = static_cast<int>((v * 137) % 360);
    out << "  <polygon points=\"" << x(t.apex) << ',' << top << ' ' << x(t.base_left) << ',' << bottom << ' '
        << x(t.base_right) << ',' << bottom << "\" fill=\"hsl(" << hue << ",70%,50%)\" fill-opacity=\"0.3\" "
        << "stroke=\"hsl(" << hue << ",70%,35%)\"/>\n";
    out << "  <text x=\"" << x(t.apex) << "\" y=\"" << top - 8 << "\" text-anchor=\"middle\" "
        << "font-family=\"sans-serif\" font-size=\"14\">" << v << "</text>\n";
  }
  out << "</svg>\n";
  return out.str();
}

TriangleRepresentation parse_representation(std::string_view structured) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(structured);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(0, std::string("invalid representation document: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("version") || json_int(doc["version"], "version") != 1) {
    throw ParseError(0, "unsupported representation version");
  }
  if (!doc.contains("triangles") || !doc["triangles"].is_array()) throw ParseError(0, "missing triangles array");
  const auto& list = doc["triangles"];
  std::vector<Triangle> triangles(list.size());
  std::vector<char> seen(list.size(), 0);
  for (const auto& entry : list) {
    if (!entry.is_object() || !entry.contains("v") || !entry.contains("apex") || !entry.contains("base")) {
      throw ParseError(0, "triangle entries need v, apex and base");
    }
    const int v = json_int(entry["v"], "v");
    if (v < 0 || static_cast<std::size_t>(v) >= list.size() || seen[static_cast<std::size_t>(v)]) {
      throw ParseError(0, "vertex ids must be a permutation of 0..n-1");
    }
    seen[static_cast<std::size_t>(v)] = 1;
    const auto& base = entry["base"];
    if (!base.is_array() || base.size() != 2) throw ParseError(0, "base must be a two-element array");
    triangles[static_cast<std::size_t>(v)] =
        Triangle{json_int(entry["apex"], "apex"), json_int(base[0], "base"), json_int(base[1], "base")};
  }
  try {
    return TriangleRepresentation(std::move(triangles));
  } catch (const InvalidRepresentation& e) {
    throw ParseError(0, e.what());
  }
}

}  // namespace simtri
