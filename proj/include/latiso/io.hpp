#pragma once

// Text formats: set files, box specs, graph exports (JSON and DOT), and
// ASCII / SVG renders of sets with an optional enclosing-box overlay.

#include <algorithm>
#include <cstdint>
#include <regex>
#include <sstream>
#include <string>

#include <json.hpp>

#include "latiso/boxes.hpp"
#include "latiso/classify.hpp"
#include "latiso/error.hpp"
#include "latiso/graphmin.hpp"
#include "latiso/lattice.hpp"
#include "latiso/symmetry.hpp"

namespace latiso {

using Json = nlohmann::json;

inline Json vertices_json(const VertexSet& a) {
  Json arr = Json::array();
  for (const auto& p : a) arr.push_back({p.x, p.y});
  return arr;
}

/// {"vertices":[[x,y],...]} in sorted order.
inline std::string set_to_json(const VertexSet& a) {
  return Json{{"vertices", vertices_json(a)}}.dump();
}

/// Parses a set file; duplicates, non-integer coordinates and missing fields
/// are ParseErrors.
inline VertexSet parse_set_json(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw Error(ErrorKind::ParseError, std::string("malformed JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("vertices") || !j["vertices"].is_array()) {
    throw Error(ErrorKind::ParseError, "expected an object with a \"vertices\" array");
  }
  std::vector<Vertex> pts;
  for (const auto& e : j["vertices"]) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer()) {
      throw Error(ErrorKind::ParseError, "each vertex must be an [x, y] integer pair");
    }
    const Vertex p{e[0].get<Coord>(), e[1].get<Coord>()};
    check_coordinates(p);
    pts.push_back(p);
  }
  const std::size_t given = pts.size();
  VertexSet a(std::move(pts));
  if (a.size() != given) throw Error(ErrorKind::ParseError, "duplicate vertex in set file");
  return a;
}

/// "B:alpha,beta", "Bhat:alpha,beta" or "a,b,c,d".
inline Box parse_box_spec(const std::string& spec) {
  static const std::regex kStd(R"(^\s*(B|Bhat)\s*:\s*(-?\d+)\s*,\s*(-?\d+)\s*$)");
  static const std::regex kRaw(R"(^\s*(-?\d+)\s*,\s*(-?\d+)\s*,\s*(-?\d+)\s*,\s*(-?\d+)\s*$)");
  std::smatch m;
  auto num = [](const std::string& s) {
    try {
      return static_cast<Coord>(std::stoll(s));
    } catch (const std::exception&) {
      throw Error(ErrorKind::ParseError, "number out of range: " + s);
    }
  };
  if (std::regex_match(spec, m, kStd)) {
    const Coord al = num(m[2]), be = num(m[3]);
    return m[1] == "B" ? standard_box(al, be) : standard_box_hat(al, be);
  }
  if (std::regex_match(spec, m, kRaw)) {
    return Box::normalize(num(m[1]), num(m[2]), num(m[3]), num(m[4]));
  }
  throw Error(ErrorKind::ParseError, "bad box spec: " + spec);
}

inline std::string node_id(const MinClass& c) { return hex_id(stable_hash(c.canonical)); }

inline Json flags_json(const MinClassFlags& f) {
  return {{"dead", f.dead},
          {"mortal", f.mortal},
          {"efficient", f.efficient},
          {"uniquely_minimal", f.uniquely_minimal},
          {"connected", f.connected}};
}

inline std::string graph_to_json(const MinGraph& g) {
  Json nodes = Json::array();
  for (const auto& c : g.nodes) {
    std::ostringstream enc;
    enc << c.enc_standard;
    nodes.push_back({{"id", node_id(c)},
                     {"grading", c.grading},
                     {"canonical", vertices_json(c.canonical)},
                     {"enc", enc.str()},
                     {"flags", flags_json(c.flags)}});
  }
  Json edges = Json::array();
  for (const auto& [lo, hi] : g.edges) edges.push_back({node_id(g.nodes[lo]), node_id(g.nodes[hi])});
  return Json{{"nodes", nodes}, {"edges", edges}, {"n_max", g.n_max}}.dump(1);
}

inline std::string graph_to_dot(const MinGraph& g) {
  std::ostringstream os;
  os << "graph minimal_sets {\n";
  for (const auto& c : g.nodes) {
    const auto id = node_id(c);
    os << "  \"" << id << "\" [label=\"g" << c.grading << ':' << id << "\"";
    if (!c.flags.mortal) os << ", style=bold";
    if (c.flags.dead) os << ", shape=box";
    os << "];\n";
  }
  for (const auto& [lo, hi] : g.edges) {
    os << "  \"" << node_id(g.nodes[lo]) << "\" -- \"" << node_id(g.nodes[hi]) << "\";\n";
  }
  os << "}\n";
  return os.str();
}

inline Json certificate_json(const MinimalityCertificate& c) {
  std::ostringstream enc, sf;
  enc << c.enc;
  sf << standard_form(c.enc);
  return {{"input_size", c.input_size},
          {"boundary_size", c.boundary_size},
          {"enc", enc.str()},
          {"enc_standard", sf.str()},
          {"enc_boundary_size", c.enc_boundary_size},
          {"N", c.n_removed},
          {"E", c.enc_excess},
          {"cone_check", c.cone_check},
          {"verdict", c.verdict}};
}

namespace detail {

struct Frame {
  Coord xmin, xmax, ymin, ymax;
};

inline Frame render_frame(const VertexSet& a, const VertexSet& extra) {
  Frame f{a[0].x, a[0].x, a[0].y, a[0].y};
  for (const auto* s : {&a, &extra}) {
    for (const auto& p : *s) {
      f.xmin = std::min(f.xmin, p.x);
      f.xmax = std::max(f.xmax, p.x);
      f.ymin = std::min(f.ymin, p.y);
      f.ymax = std::max(f.ymax, p.y);
    }
  }
  return f;
}

inline VertexSet overlay(const VertexSet& a, bool show_enc) {
  return show_enc ? set_difference(box_to_set(enclosing_box(a)), a) : VertexSet{};
}

}  // namespace detail

/// '#' for A, 'o' for enc(A) minus A when requested, '.' elsewhere; top row is
/// the largest y.
inline std::string render_ascii(const VertexSet& a, bool show_enc = false) {
  if (a.empty()) throw Error(ErrorKind::EmptySet, "render of empty set");
  const VertexSet holes = detail::overlay(a, show_enc);
  const auto f = detail::render_frame(a, holes);
  std::string out;
  for (Coord y = f.ymax; y >= f.ymin; --y) {
    for (Coord x = f.xmin; x <= f.xmax; ++x) {
      const Vertex p{x, y};
      out += a.contains(p) ? '#' : holes.contains(p) ? 'o' : '.';
    }
    out += '\n';
  }
  return out;
}

/// Unit squares centered on the points, y axis up. Filled squares for A,
/// outlined squares for enc(A) minus A when requested.
inline std::string render_svg(const VertexSet& a, bool show_enc = false) {
  if (a.empty()) throw Error(ErrorKind::EmptySet, "render of empty set");
  constexpr int kCell = 20;
  const VertexSet holes = detail::overlay(a, show_enc);
  const auto f = detail::render_frame(a, holes);
  const Coord w = (f.xmax - f.xmin + 1) * kCell, h = (f.ymax - f.ymin + 1) * kCell;
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w + 2 << "\" height=\"" << h + 2
     << "\" viewBox=\"-1 -1 " << w + 2 << ' ' << h + 2 << "\">\n";
  auto cell = [&](const Vertex& p, const char* style) {
    os << "  <rect x=\"" << (p.x - f.xmin) * kCell << "\" y=\"" << (f.ymax - p.y) * kCell
       << "\" width=\"" << kCell << "\" height=\"" << kCell << "\" " << style << "/>\n";
  };
  for (const auto& p : a) cell(p, "fill=\"black\" stroke=\"gray\"");
  for (const auto& p : holes) cell(p, "fill=\"white\" stroke=\"black\"");
  os << "</svg>\n";
  return os.str();
}

}  // namespace latiso
