#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "atgraph/alon_tarsi.hpp"
#include "atgraph/graph.hpp"

namespace atgraph {

// Graph JSON: {"n": int, "edges": [[u,v],...], "labels": [...]?}. Edges are
// emitted sorted with u < v; labels are omitted when all Plain.
nlohmann::json graph_to_json(const Graph& g);
Graph graph_from_json(const nlohmann::json& j);

// Canonical structural form used for certificate digests: the compact JSON
// text {"edges":[[u,v],...],"n":N} with the sorted edge list and no labels.
std::string canonical_json(const Graph& g);
std::string graph_sha256(const Graph& g);
std::string sha256_hex(std::string_view data);

// Plain text: first line "n m", then m lines "u v".
std::string to_edgelist(const Graph& g);
Graph parse_edgelist(std::string_view text);

// Accepts either format; JSON when the first non-space byte is '{'.
Graph parse_graph(std::string_view text);

struct DotOptions {
  std::string name = "g";
  bool show_provenance = true;
};
std::string to_dot(const Graph& g, const DotOptions& opts = {});

// Certificate JSON: {"graph_sha": hex, "k": int, "arcs": [[tail,head],...],
// "diff": int, "method": str, "verified": bool}.
nlohmann::json certificate_to_json(const Certificate& c);
Certificate certificate_from_json(const nlohmann::json& j);

}  // namespace atgraph
