#include "atgraph/io.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <sstream>

#include "atgraph/errors.hpp"

namespace atgraph {

namespace {

nlohmann::json label_to_json(const VertexLabel& label) {
  using Kind = VertexLabel::Kind;
  switch (label.kind) {
    case Kind::Plain:
      return {{"kind", "plain"}};
    case Kind::Original:
      return {{"kind", "original"}, {"u", label.u}};
    case Kind::EdgeVertex:
      return {{"kind", "edge"}, {"u", label.u}, {"v", label.v}};
    case Kind::Pair:
      return {{"kind", "pair"},
              {"inner", label_to_json(*label.inner)},
              {"h", label.layer}};
  }
  return {{"kind", "plain"}};
}

VertexLabel label_from_json(const nlohmann::json& j) {
  std::string kind = j.at("kind").get<std::string>();
  if (kind == "plain") return VertexLabel::plain();
  if (kind == "original") return VertexLabel::original(j.at("u").get<int>());
  if (kind == "edge")
    return VertexLabel::edge_vertex(j.at("u").get<int>(), j.at("v").get<int>());
  if (kind == "pair")
    return VertexLabel::pair(label_from_json(j.at("inner")),
                             j.at("h").get<int>());
  throw ParseError(0, "unknown label kind '" + kind + "'");
}

nlohmann::json edges_to_json(const Graph& g) {
  nlohmann::json edges = nlohmann::json::array();
  for (const Edge& e : g.edges()) edges.push_back({e.u, e.v});
  return edges;
}

}  // namespace

nlohmann::json graph_to_json(const Graph& g) {
  nlohmann::json j;
  j["n"] = g.order();
  j["edges"] = edges_to_json(g);
  bool all_plain = std::all_of(
      g.labels().begin(), g.labels().end(),
      [](const VertexLabel& l) { return l.kind == VertexLabel::Kind::Plain; });
  if (!all_plain) {
    nlohmann::json labels = nlohmann::json::array();
    for (const VertexLabel& l : g.labels()) labels.push_back(label_to_json(l));
    j["labels"] = std::move(labels);
  }
  return j;
}

Graph graph_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("edges"))
    throw ParseError(0, "graph JSON needs fields \"n\" and \"edges\"");
  int n = j.at("n").get<int>();
  std::vector<Edge> edges;
  for (const auto& pair : j.at("edges")) {
    if (!pair.is_array() || pair.size() != 2)
      throw ParseError(0, "edge entries must be [u, v] pairs");
    edges.push_back({pair[0].get<int>(), pair[1].get<int>()});
  }
  std::vector<VertexLabel> labels(static_cast<size_t>(std::max(n, 0)));
  if (j.contains("labels")) {
    const auto& raw = j.at("labels");
    if (static_cast<int>(raw.size()) != n)
      throw ParseError(0, "labels must have exactly one entry per vertex");
    labels.clear();
    for (const auto& entry : raw) labels.push_back(label_from_json(entry));
  }
  return Graph::build(n, std::move(edges), std::move(labels));
}

std::string canonical_json(const Graph& g) {
  nlohmann::json j;
  j["n"] = g.order();
  j["edges"] = edges_to_json(g);
  return j.dump();  // objects serialize with sorted keys
}

std::string sha256_hex(std::string_view data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int length = 0;
  if (!EVP_Digest(data.data(), data.size(), digest, &length, EVP_sha256(),
                  nullptr))
    throw Error("sha256 digest failed");
  static const char* hex = "0123456789abcdef";
  std::string out;
  out.reserve(length * 2);
  for (unsigned int i = 0; i < length; i++) {
    out.push_back(hex[digest[i] >> 4]);
    out.push_back(hex[digest[i] & 0xf]);
  }
  return out;
}

std::string graph_sha256(const Graph& g) { return sha256_hex(canonical_json(g)); }

std::string to_edgelist(const Graph& g) {
  std::ostringstream out;
  out << g.order() << ' ' << g.size() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

Graph parse_edgelist(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  auto next_line = [&]() -> bool {
    while (std::getline(in, line)) {
      lineno++;
      if (line.find_first_not_of(" \t\r") != std::string::npos) return true;
    }
    return false;
  };
  if (!next_line()) throw ParseError(1, "expected header \"n m\"");
  int n = 0, m = 0;
  {
    std::istringstream header(line);
    std::string extra;
    if (!(header >> n >> m) || (header >> extra))
      throw ParseError(lineno, "expected header \"n m\"");
  }
  std::vector<Edge> edges;
  std::vector<std::pair<Edge, int>> seen;  // normalized edge -> line
  for (int i = 0; i < m; i++) {
    if (!next_line())
      throw ParseError(lineno + 1, "expected " + std::to_string(m) +
                                       " edges, got " + std::to_string(i));
    std::istringstream row(line);
    int u = 0, v = 0;
    std::string extra;
    if (!(row >> u >> v) || (row >> extra))
      throw ParseError(lineno, "expected \"u v\"");
    if (u == v) throw ParseError(lineno, "self-loop (" + std::to_string(u) +
                                             ", " + std::to_string(v) + ")");
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw ParseError(lineno, "endpoint out of range");
    Edge e{std::min(u, v), std::max(u, v)};
    for (const auto& [prev, at] : seen)
      if (prev == e)
        throw ParseError(lineno, "duplicate of edge at line " +
                                     std::to_string(at));
    seen.push_back({e, lineno});
    edges.push_back(e);
  }
  if (next_line()) throw ParseError(lineno, "trailing content after edge list");
  return Graph::build(n, std::move(edges));
}

Graph parse_graph(std::string_view text) {
  size_t first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '{') {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
      throw ParseError(0, std::string("invalid JSON: ") + e.what());
    }
    return graph_from_json(j);
  }
  return parse_edgelist(text);
}

std::string to_dot(const Graph& g, const DotOptions& opts) {
  std::ostringstream out;
  out << "graph " << opts.name << " {\n";
  for (int v = 0; v < g.order(); v++) {
    out << "  " << v;
    std::string provenance =
        opts.show_provenance ? to_string(g.label(v)) : std::string();
    if (provenance.empty())
      out << " [label=\"" << v << "\"];\n";
    else
      out << " [label=\"" << provenance << "\"];\n";
  }
  for (const Edge& e : g.edges()) out << "  " << e.u << " -- " << e.v << ";\n";
  out << "}\n";
  return out.str();
}

nlohmann::json certificate_to_json(const Certificate& c) {
  nlohmann::json arcs = nlohmann::json::array();
  for (const Arc& a : c.arcs) arcs.push_back({a.tail, a.head});
  return {{"graph_sha", c.graph_sha}, {"k", c.k},           {"arcs", arcs},
          {"diff", c.diff},           {"method", c.method}, {"verified", c.verified}};
}

Certificate certificate_from_json(const nlohmann::json& j) {
  Certificate c;
  c.graph_sha = j.at("graph_sha").get<std::string>();
  c.k = j.at("k").get<int>();
  for (const auto& pair : j.at("arcs")) {
    if (!pair.is_array() || pair.size() != 2)
      throw ParseError(0, "arc entries must be [tail, head] pairs");
    c.arcs.push_back({pair[0].get<int>(), pair[1].get<int>()});
  }
  c.diff = j.at("diff").get<std::int64_t>();
  c.method = j.at("method").get<std::string>();
  c.verified = j.value("verified", true);
  return c;
}

}  // namespace atgraph
