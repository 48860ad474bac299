// SPDX-License-Identifier: Apache-2.0
#include "affino/document.hpp"

#include "affino/errors.hpp"
#include "affino/geometry.hpp"

#include <json.hpp>

#include <limits>

namespace affino::cli {

namespace {

using nlohmann::json;

Gain as_integer(const json& v, const char* what) {
  if (!v.is_number_integer()) throw InvalidInput(std::string(what) + " must be an integer");
  return v.get<Gain>();
}

std::vector<Triple> triples(const json& list, const char* what) {
  if (!list.is_array()) throw InvalidInput(std::string(what) + " must be a list of [i, j, g]");
  std::vector<Triple> out;
  out.reserve(list.size());
  for (const json& item : list) {
    if (!item.is_array() || item.size() != 3) {
      throw InvalidInput(std::string(what) + " entries must be [i, j, g] triples");
    }
    out.push_back({as_integer(item[0], what), as_integer(item[1], what), as_integer(item[2], what)});
  }
  return out;
}

}  // namespace

GraphDocument parse_document(std::string_view text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InvalidInput(std::string("parse error: ") + e.what());
  }
  if (!root.is_object()) throw InvalidInput("document must be a JSON object");
  if (!root.contains("n")) throw InvalidInput("document needs field n");

  GraphDocument doc;
  const Gain n = as_integer(root["n"], "n");
  if (n < 0 || n > std::numeric_limits<int>::max()) throw InvalidInput("n out of range");
  doc.n = static_cast<int>(n);

  const bool has_edges = root.contains("edges");
  const bool has_hyperplanes = root.contains("hyperplanes");
  if (has_edges == has_hyperplanes) {
    throw InvalidInput("document needs exactly one of edges or hyperplanes");
  }
  if (has_edges) doc.edges = triples(root["edges"], "edges");
  if (has_hyperplanes) doc.hyperplanes = triples(root["hyperplanes"], "hyperplanes");

  if (root.contains("bounds")) {
    const json& b = root["bounds"];
    if (!b.is_array()) throw InvalidInput("bounds must be a list of integers");
    std::vector<Gain> bounds;
    for (const json& v : b) bounds.push_back(as_integer(v, "bounds"));
    doc.bounds = std::move(bounds);
  }
  return doc;
}

LoadedGraph load_graph(const GraphDocument& doc) {
  auto check_vertex = [&doc](Gain v) {
    if (v < 1 || v > doc.n) {
      throw InvalidInput("vertex index " + std::to_string(v) + " out of range 1.." + std::to_string(doc.n));
    }
  };

  LoadedGraph out;
  if (doc.edges) {
    std::vector<Edge> edges;
    for (const Triple& t : *doc.edges) {
      check_vertex(t[0]);
      check_vertex(t[1]);
      edges.push_back({static_cast<Vertex>(t[0]), static_cast<Vertex>(t[1]), t[2]});
    }
    out.graph = GainGraph(doc.n, edges);
  } else if (doc.hyperplanes) {
    std::vector<Hyperplane> hs;
    for (const Triple& t : *doc.hyperplanes) {
      check_vertex(t[0]);
      check_vertex(t[1]);
      hs.push_back({static_cast<Vertex>(t[0]), static_cast<Vertex>(t[1]), t[2]});
    }
    out.graph = arrangement_to_gain_graph(Arrangement(doc.n, hs));
  } else {
    throw InvalidInput("document needs exactly one of edges or hyperplanes");
  }

  if (doc.bounds) {
    if (doc.bounds->size() != static_cast<std::size_t>(doc.n)) {
      throw InvalidInput("bounds must list n integers");
    }
    out.rooted = RootedGainGraph(out.graph, *doc.bounds);
  }
  return out;
}

LoadedGraph parse_graph(std::string_view text) { return load_graph(parse_document(text)); }

std::string document_text(const GainGraph& graph) {
  nlohmann::ordered_json doc;
  doc["n"] = graph.order();
  doc["edges"] = nlohmann::ordered_json::array();
  for (const Edge& e : graph.edges()) doc["edges"].push_back({e.tail, e.head, e.gain});
  return doc.dump();
}

}  // namespace affino::cli
