#include "latcoh/graph.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <numeric>
#include <sstream>

#include "json.hpp"
#include "latcoh/error.hpp"

namespace latcoh {

bool is_valid_id(std::string_view id) {
  return !id.empty() && std::all_of(id.begin(), id.end(), [](unsigned char c) {
    return std::isalnum(c) || c == '_';
  });
}

int PlumbingGraph::add_vertex(std::string id, Int weight) {
  if (!is_valid_id(id)) throw Error("invalid vertex id '" + id + "'");
  if (find(id)) throw Error("duplicate vertex id '" + id + "'");
  if (size() >= kMaxVertices) throw Error("too many vertices (limit " + std::to_string(kMaxVertices) + ")");
  ids_.push_back(std::move(id));
  weights_.push_back(weight);
  return size() - 1;
}

void PlumbingGraph::add_edge(int from, int to, int sign) {
  if (from < 0 || to < 0 || from >= size() || to >= size()) throw Error("edge endpoint out of range");
  if (from == to) throw Error("self-loop at vertex '" + ids_[from] + "'");
  if (sign != 1 && sign != -1) throw Error("edge sign must be +1 or -1");
  edges_.push_back({from, to, sign});
}

std::optional<int> PlumbingGraph::find(std::string_view id) const {
  auto it = std::find(ids_.begin(), ids_.end(), id);
  if (it == ids_.end()) return std::nullopt;
  return static_cast<int>(it - ids_.begin());
}

int PlumbingGraph::index_of(std::string_view id) const {
  if (auto v = find(id)) return *v;
  throw UnknownVertexError(std::string(id));
}

int PlumbingGraph::degree(int v) const {
  return static_cast<int>(std::count_if(edges_.begin(), edges_.end(),
                                        [v](const Edge& e) { return e.from == v || e.to == v; }));
}

namespace {

std::vector<std::string> split_tokens(std::string_view line) {
  std::vector<std::string> tokens;
  std::string current;
  for (char c : line) {
    if (c == '#') break;
    if (std::isspace(static_cast<unsigned char>(c))) {
      if (!current.empty()) tokens.push_back(std::move(current)), current.clear();
    } else {
      current.push_back(c);
    }
  }
  if (!current.empty()) tokens.push_back(std::move(current));
  return tokens;
}

std::optional<Int> parse_int(std::string_view s) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  Int value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty()) return std::nullopt;
  return value;
}

PlumbingGraph parse_text(std::string_view text) {
  PlumbingGraph g;
  bool seen_header = false;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    auto tok = split_tokens(line);
    if (tok.empty()) continue;
    if (!seen_header) {
      if (tok.size() != 2 || tok[0] != "plumbing" || tok[1] != "v1") {
        throw ParseError(line_no, "header", "expected 'plumbing v1'");
      }
      seen_header = true;
      continue;
    }
    if (tok[0] == "vertex") {
      if (tok.size() != 3) throw ParseError(line_no, "vertex", "expected 'vertex <id> <weight>'");
      if (!is_valid_id(tok[1])) throw ParseError(line_no, "vertex id", "invalid id '" + tok[1] + "'");
      if (g.find(tok[1])) throw ParseError(line_no, "vertex id", "duplicate vertex '" + tok[1] + "'");
      auto w = parse_int(tok[2]);
      if (!w) throw ParseError(line_no, "weight", "malformed integer '" + tok[2] + "'");
      try {
        g.add_vertex(tok[1], *w);
      } catch (const Error& e) {
        throw ParseError(line_no, "vertex", e.what());
      }
    } else if (tok[0] == "edge") {
      if (tok.size() != 4) throw ParseError(line_no, "edge", "expected 'edge <id> <id> <+|->'");
      auto a = g.find(tok[1]);
      if (!a) throw ParseError(line_no, "edge", "undeclared vertex '" + tok[1] + "'");
      auto b = g.find(tok[2]);
      if (!b) throw ParseError(line_no, "edge", "undeclared vertex '" + tok[2] + "'");
      if (*a == *b) throw ParseError(line_no, "edge", "self-loop at '" + tok[1] + "'");
      int sign = 0;
      if (tok[3] == "+") sign = 1;
      else if (tok[3] == "-") sign = -1;
      else throw ParseError(line_no, "edge sign", "expected '+' or '-', got '" + tok[3] + "'");
      g.add_edge(*a, *b, sign);
    } else {
      throw ParseError(line_no, "record", "unknown record type '" + tok[0] + "'");
    }
  }
  if (!seen_header) throw ParseError(line_no, "header", "missing 'plumbing v1' header");
  return g;
}

PlumbingGraph parse_json(std::string_view text) {
  using nlohmann::json;
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(1, "json", e.what());
  }
  PlumbingGraph g;
  if (!doc.is_object() || !doc.contains("vertices") || !doc["vertices"].is_array()) {
    throw ParseError(1, "vertices", "expected an array of {id, weight}");
  }
  int index = 0;
  for (const auto& v : doc["vertices"]) {
    const std::string field = "vertices[" + std::to_string(index++) + "]";
    if (!v.is_object() || !v.contains("id") || !v["id"].is_string()) throw ParseError(1, field, "missing string id");
    if (!v.contains("weight") || !v["weight"].is_number_integer()) throw ParseError(1, field, "malformed weight");
    std::string id = v["id"].get<std::string>();
    if (!is_valid_id(id)) throw ParseError(1, field, "invalid id '" + id + "'");
    if (g.find(id)) throw ParseError(1, field, "duplicate vertex '" + id + "'");
    g.add_vertex(id, v["weight"].get<Int>());
  }
  index = 0;
  if (doc.contains("edges")) {
    if (!doc["edges"].is_array()) throw ParseError(1, "edges", "expected an array");
    for (const auto& e : doc["edges"]) {
      const std::string field = "edges[" + std::to_string(index++) + "]";
      if (!e.is_object() || !e.contains("from") || !e.contains("to") || !e.contains("sign")) {
        throw ParseError(1, field, "expected {from, to, sign}");
      }
      auto endpoint = [&](const char* key) {
        const auto& id = e[key];
        return id.is_string() ? g.find(id.get<std::string>()).value_or(-1) : -1;
      };
      const int a = endpoint("from");
      const int b = endpoint("to");
      if (a < 0 || b < 0) throw ParseError(1, field, "undeclared vertex");
      if (a == b) throw ParseError(1, field, "self-loop");
      int sign = 0;
      const auto& s = e["sign"];
      if (s.is_string() && s.get<std::string>() == "+") sign = 1;
      else if (s.is_string() && s.get<std::string>() == "-") sign = -1;
      else if (s.is_number_integer() && (s.get<int>() == 1 || s.get<int>() == -1)) sign = s.get<int>();
      else throw ParseError(1, field, "sign must be '+', '-', 1 or -1");
      g.add_edge(a, b, sign);
    }
  }
  return g;
}

}  // namespace

PlumbingGraph parse_graph(std::string_view text) {
  auto first = std::find_if(text.begin(), text.end(), [](unsigned char c) { return !std::isspace(c); });
  if (first != text.end() && *first == '{') return parse_json(text);
  return parse_text(text);
}

PlumbingGraph read_graph_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open graph file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_graph(buf.str());
}

std::string to_text(const PlumbingGraph& g) {
  std::ostringstream out;
  out << "plumbing v1\n";
  for (int v = 0; v < g.size(); ++v) out << "vertex " << g.id(v) << ' ' << g.weight(v) << '\n';
  for (const auto& e : g.edges()) {
    out << "edge " << g.id(e.from) << ' ' << g.id(e.to) << ' ' << (e.sign > 0 ? '+' : '-') << '\n';
  }
  return out.str();
}

std::string graph_hash(const PlumbingGraph& g) { return content_hash(to_text(g)); }

std::string content_hash(std::string_view text) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

IntersectionForm::IntersectionForm(IntMatrix m) : m_(std::move(m)) {
  if (m_.rows() != m_.cols()) throw Error("intersection form must be square");
  for (std::size_t i = 0; i < m_.rows(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (m_(i, j) != m_(j, i)) throw Error("intersection form must be symmetric");
}

IntersectionForm intersection_form(const PlumbingGraph& g) {
  const auto n = static_cast<std::size_t>(g.size());
  IntMatrix m(n, n);
  for (std::size_t v = 0; v < n; ++v) m(v, v) = g.weight(static_cast<int>(v));
  for (const auto& e : g.edges()) {
    m(e.from, e.to) += e.sign;
    m(e.to, e.from) += e.sign;
  }
  return IntersectionForm(std::move(m));
}

Int determinant(const PlumbingGraph& g) { return determinant(intersection_form(g).matrix()); }

bool is_acyclic(const PlumbingGraph& g) {
  std::vector<int> parent(g.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto root = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& e : g.edges()) {
    int a = root(e.from), b = root(e.to);
    if (a == b) return false;
    parent[a] = b;
  }
  return true;
}

bool is_form_negative_definite(const IntersectionForm& form) {
  auto minors = leading_principal_minors(scaled(form.matrix(), -1));
  return std::all_of(minors.begin(), minors.end(), [](Int d) { return d > 0; });
}

Definiteness definiteness(const PlumbingGraph& g) {
  return {is_acyclic(g), is_form_negative_definite(intersection_form(g))};
}

bool is_negative_definite(const PlumbingGraph& g) { return definiteness(g).negative_definite(); }

std::vector<int> bad_vertices(const PlumbingGraph& g) {
  std::vector<int> bad;
  for (int v = 0; v < g.size(); ++v)
    if (g.weight(v) + g.degree(v) > 0) bad.push_back(v);
  return bad;
}

PlumbingGraph delete_vertex(const PlumbingGraph& g, int v) {
  if (v < 0 || v >= g.size()) throw UnknownVertexError(std::to_string(v));
  PlumbingGraph out;
  std::vector<int> remap(g.size(), -1);
  for (int w = 0; w < g.size(); ++w) {
    if (w == v) continue;
    remap[w] = out.add_vertex(g.id(w), g.weight(w));
  }
  for (const auto& e : g.edges()) {
    if (e.from == v || e.to == v) continue;
    out.add_edge(remap[e.from], remap[e.to], e.sign);
  }
  return out;
}

PlumbingGraph increment_weight(const PlumbingGraph& g, int v) {
  if (v < 0 || v >= g.size()) throw UnknownVertexError(std::to_string(v));
  PlumbingGraph out;
  for (int w = 0; w < g.size(); ++w) out.add_vertex(g.id(w), g.weight(w) + (w == v ? 1 : 0));
  for (const auto& e : g.edges()) out.add_edge(e.from, e.to, e.sign);
  return out;
}

}  // namespace latcoh
