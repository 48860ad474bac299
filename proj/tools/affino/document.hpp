// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "affino/gain_graph.hpp"

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace affino::cli {

using Triple = std::array<Gain, 3>;

/// The JSON input document:
///   {"n": 3, "edges": [[1,2,0], [1,2,1]], "bounds": [0,0,1]}
///   {"n": 2, "hyperplanes": [[1,2,1]]}
/// Exactly one of edges / hyperplanes; bounds makes the graph rooted.
struct GraphDocument {
  int n = 0;
  std::optional<std::vector<Triple>> edges;
  std::optional<std::vector<Triple>> hyperplanes;
  std::optional<std::vector<Gain>> bounds;
};

struct LoadedGraph {
  GainGraph graph;
  /// Present when the document carried bounds.
  std::optional<RootedGainGraph> rooted;

  [[nodiscard]] RootedGainGraph as_rooted() const { return rooted ? *rooted : rooting(graph); }
};

/// Throws InvalidInput on malformed text or shapes.
[[nodiscard]] GraphDocument parse_document(std::string_view text);
/// Validates indices and builds the canonical graph; hyperplanes go through
/// the arrangement translation.
[[nodiscard]] LoadedGraph load_graph(const GraphDocument& doc);
[[nodiscard]] LoadedGraph parse_graph(std::string_view text);

/// {"n":..., "edges":[...]} for a graph, edges in canonical order.
[[nodiscard]] std::string document_text(const GainGraph& graph);

}  // namespace affino::cli
