#pragma once

#include <charconv>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>

#include <json.hpp>

#include "hypergraph.hpp"

namespace hyperspec {

struct parse_error : error {
  parse_error(const std::string& where, const std::string& what)
      : error(where + ": " + what), location(where) {}
  std::string location;
};

namespace detail {

inline std::string trim(std::string_view s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

template <class T>
bool parse_number(const std::string& tok, T& out) {
  const char* end = tok.data() + tok.size();
  auto [ptr, ec] = std::from_chars(tok.data(), end, out);
  return ec == std::errc() && ptr == end;
}

inline std::string shortest(double w) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, w);
  (void)ec;
  return std::string(buf, ptr);
}

// common validation for one parsed edge
inline void insert_edge(hypergraph_builder& b, std::vector<int> verts, double w,
                        const std::string& where) {
  if (static_cast<int>(verts.size()) != b.rank())
    throw parse_error(where, "edge has " + std::to_string(verts.size()) +
                                 " vertices, expected " + std::to_string(b.rank()));
  for (int v : verts)
    if (v < 0 || v >= b.order())
      throw parse_error(where, "vertex " + std::to_string(v) + " out of range");
  std::vector<int> s = verts;
  std::sort(s.begin(), s.end());
  if (std::adjacent_find(s.begin(), s.end()) != s.end())
    throw parse_error(where, "repeated vertex " +
                                 std::to_string(*std::adjacent_find(s.begin(), s.end())));
  if (!(w >= 0.0) || !std::isfinite(w)) throw parse_error(where, "negative weight");
  if (b.contains(s)) throw parse_error(where, "duplicate edge");
  b.set(s, w);
}

}  // namespace detail

inline hypergraph parse_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw parse_error("byte " + std::to_string(e.byte), "malformed JSON");
  }
  if (!j.is_object()) throw parse_error("header", "top level must be an object");
  for (const char* key : {"rank", "vertices", "edges"})
    if (!j.contains(key)) throw parse_error("header", std::string("missing field '") + key + "'");
  if (!j["rank"].is_number_integer() || j["rank"].get<long long>() < 2)
    throw parse_error("rank", "must be an integer >= 2");
  if (!j["vertices"].is_number_integer() || j["vertices"].get<long long>() < 0)
    throw parse_error("vertices", "must be a nonnegative integer");
  if (!j["edges"].is_array()) throw parse_error("edges", "must be an array");
  hypergraph_builder b(j["rank"].get<int>(), j["vertices"].get<int>());
  std::size_t i = 0;
  for (const auto& e : j["edges"]) {
    std::string where = "edges[" + std::to_string(i++) + "]";
    if (!e.is_object() || !e.contains("verts") || !e["verts"].is_array())
      throw parse_error(where, "expected {\"verts\": [...], \"w\": x}");
    std::vector<int> verts;
    for (const auto& v : e["verts"]) {
      if (!v.is_number_integer()) throw parse_error(where + ".verts", "vertex ids must be integers");
      verts.push_back(v.get<int>());
    }
    double w = 1.0;
    if (e.contains("w")) {
      if (!e["w"].is_number()) throw parse_error(where + ".w", "weight must be a number");
      w = e["w"].get<double>();
    }
    detail::insert_edge(b, std::move(verts), w, where);
  }
  return b.build();
}

inline hypergraph parse_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  auto next = [&](std::string& out) {
    while (std::getline(in, line)) {
      ++lineno;
      out = detail::trim(line.substr(0, line.find('#')));  // '#' starts a comment
      if (!out.empty()) return true;
    }
    return false;
  };
  auto tokens = [](const std::string& s) {
    std::vector<std::string> out;
    std::istringstream ts(s);
    for (std::string t; ts >> t;) out.push_back(t);
    return out;
  };
  std::string cur;
  if (!next(cur)) throw parse_error("line 1", "malformed header: empty input");
  auto head = tokens(cur);
  long long r = 0, n = 0, m = 0;
  if (head.size() != 3 || !detail::parse_number(head[0], r) || !detail::parse_number(head[1], n) ||
      !detail::parse_number(head[2], m) || r < 2 || n < 0 || m < 0)
    throw parse_error("line " + std::to_string(lineno), "malformed header, expected 'r n m'");
  hypergraph_builder b(static_cast<int>(r), static_cast<int>(n));
  for (long long i = 0; i < m; ++i) {
    if (!next(cur))
      throw parse_error("line " + std::to_string(lineno + 1),
                        "expected " + std::to_string(m) + " edges, found " + std::to_string(i));
    std::string where = "line " + std::to_string(lineno);
    auto tok = tokens(cur);
    if (static_cast<long long>(tok.size()) != r && static_cast<long long>(tok.size()) != r + 1)
      throw parse_error(where, "expected " + std::to_string(r) + " vertex ids and an optional weight");
    std::vector<int> verts;
    for (long long k = 0; k < r; ++k) {
      int v = 0;
      if (!detail::parse_number(tok[k], v))
        throw parse_error(where + " field " + std::to_string(k + 1), "bad vertex id '" + tok[k] + "'");
      verts.push_back(v);
    }
    double w = 1.0;
    if (static_cast<long long>(tok.size()) == r + 1 && !detail::parse_number(tok[r], w))
      throw parse_error(where + " field " + std::to_string(r + 1), "bad weight '" + tok[r] + "'");
    detail::insert_edge(b, std::move(verts), w, where);
  }
  if (next(cur)) throw parse_error("line " + std::to_string(lineno), "trailing data after edges");
  return b.build();
}

// JSON when the first significant character is '{', text otherwise
inline hypergraph parse(std::string_view text) {
  auto pos = text.find_first_not_of(" \t\r\n");
  if (pos != std::string_view::npos && text[pos] == '{') return parse_json(text);
  return parse_text(text);
}

inline nlohmann::json to_json(const hypergraph& g) {
  nlohmann::json edges = nlohmann::json::array();
  for (std::size_t i = 0; i < g.num_edges(); ++i) {
    auto e = g.edge(i);
    edges.push_back({{"verts", std::vector<int>(e.begin(), e.end())}, {"w", g.weight(i)}});
  }
  return {{"rank", g.rank()}, {"vertices", g.order()}, {"edges", edges}};
}

inline std::string serialize_json(const hypergraph& g) { return to_json(g).dump() + "\n"; }

inline std::string serialize_text(const hypergraph& g) {
  std::string out = std::to_string(g.rank()) + " " + std::to_string(g.order()) + " " +
                    std::to_string(g.num_edges()) + "\n";
  for (std::size_t i = 0; i < g.num_edges(); ++i) {
    for (int v : g.edge(i)) out += std::to_string(v) + " ";
    out += detail::shortest(g.weight(i)) + "\n";
  }
  return out;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline hypergraph load(const std::string& path) { return parse(read_file(path)); }

inline void save(const hypergraph& g, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw error("cannot write " + path);
  bool text = path.size() >= 4 && path.substr(path.size() - 4) == ".txt";
  out << (text ? serialize_text(g) : serialize_json(g));
}

}  // namespace hyperspec
