#pragma once

#include <fstream>
#include <sstream>
#include <string>

#include <nlohmann/json.hpp>

#include "pslgcount/pslg.hpp"

namespace pslgcount {

// Graph file format (UTF-8 JSON):
//   {"n": 3, "points": [["0","0"],["2","0"],["1","2"]], "edges": [[0,1],[1,2],[2,0]], "directed": false}
// Coordinates are strings "p" or "p/q" with q > 0. Edges are 0-based.

namespace detail {

inline Rational coordinate_from_json(const nlohmann::json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(BigInt(j.dump(), 10));
  throw ParseError("coordinate must be a rational string, got " + j.dump());
}

}  // namespace detail

inline Pslg pslg_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw ParseError("graph file: top level must be an object");
  for (const char* key : {"n", "points", "edges"})
    if (!j.contains(key)) throw ParseError(std::string("graph file: missing key '") + key + "'");
  if (!j["n"].is_number_integer() || j["n"].get<long long>() < 0) throw ParseError("graph file: 'n' must be a non-negative integer");
  const auto n = j["n"].get<long long>();
  const auto& pts = j["points"];
  const auto& edges = j["edges"];
  if (!pts.is_array() || static_cast<long long>(pts.size()) != n)
    throw ParseError("graph file: 'points' must be an array of length n");
  if (!edges.is_array()) throw ParseError("graph file: 'edges' must be an array");

  Pslg g;
  g.directed = j.value("directed", false);
  g.points.reserve(pts.size());
  for (const auto& p : pts) {
    if (!p.is_array() || p.size() != 2) throw ParseError("graph file: each point must be [x, y]");
    g.points.push_back({detail::coordinate_from_json(p[0]), detail::coordinate_from_json(p[1])});
  }
  for (const auto& e : edges) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer())
      throw ParseError("graph file: each edge must be [i, j] with integer ids");
    auto a = e[0].get<long long>(), b = e[1].get<long long>();
    if (a < 0 || b < 0 || a >= n || b >= n) throw ParseError("graph file: edge " + e.dump() + " index out of range");
    if (a == b) throw ParseError("graph file: edge " + e.dump() + " is a self-loop");
    g.edges.emplace_back(static_cast<VertexId>(a), static_cast<VertexId>(b));
  }
  return g;
}

inline nlohmann::ordered_json pslg_to_json(const Pslg& g) {
  nlohmann::ordered_json j;
  j["n"] = g.n();
  auto pts = nlohmann::ordered_json::array();
  for (const auto& p : g.points) pts.push_back({format_rational(p.x), format_rational(p.y)});
  j["points"] = std::move(pts);
  auto es = nlohmann::ordered_json::array();
  for (auto [a, b] : g.edges) es.push_back({a, b});
  j["edges"] = std::move(es);
  j["directed"] = g.directed;
  return j;
}

inline Pslg parse_pslg(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("graph file: malformed JSON: ") + e.what());
  }
  return pslg_from_json(j);
}

inline std::string serialize_pslg(const Pslg& g) { return pslg_to_json(g).dump() + "\n"; }

inline Pslg read_pslg(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_pslg(ss.str());
}

inline void write_pslg(const Pslg& g, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << serialize_pslg(g);
}

}  // namespace pslgcount
