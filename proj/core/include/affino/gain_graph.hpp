// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

namespace affino {

/// 1-based vertex index.
using Vertex = int;
using Gain = std::int64_t;
/// Position of an edge record in GainGraph::edges().
using EdgeId = std::size_t;

/// The edge g e_{ij}: endpoints v_i, v_j and gain g read in the direction i -> j.
struct Edge {
  Vertex tail = 1;
  Vertex head = 1;
  Gain gain = 0;

  [[nodiscard]] bool is_loop() const noexcept { return tail == head; }

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Canonical orientation: tail <= head; a loop keeps the nonnegative gain.
[[nodiscard]] Edge canonical(Edge e) noexcept;

/// An integral gain graph on vertices 1..n.
///
/// Edges are stored canonically (see canonical()), sorted and deduplicated.
/// Duplicate records only bump a multiplicity counter, which never enters
/// any count.
class GainGraph {
 public:
  GainGraph() = default;
  explicit GainGraph(int order);
  GainGraph(int order, std::span<const Edge> edges);
  GainGraph(int order, std::initializer_list<Edge> edges);

  [[nodiscard]] int order() const noexcept { return order_; }
  [[nodiscard]] const std::vector<Edge>& edges() const noexcept { return edges_; }
  [[nodiscard]] std::size_t size() const noexcept { return edges_.size(); }

  /// Throws InvalidInput for an unknown id.
  [[nodiscard]] const Edge& edge(EdgeId id) const;
  [[nodiscard]] int multiplicity(EdgeId id) const;
  [[nodiscard]] std::optional<EdgeId> find(Edge e) const;

  [[nodiscard]] bool has_zero_loop() const noexcept;
  [[nodiscard]] bool all_gains_zero() const noexcept;

  friend bool operator==(const GainGraph& a, const GainGraph& b) noexcept {
    return a.order_ == b.order_ && a.edges_ == b.edges_;
  }

 private:
  int order_ = 0;
  std::vector<Edge> edges_;
  std::vector<int> multiplicity_;
};

/// A gain graph plus an implicit root v_0 colored 0. Root edges to v_i carry
/// the gain set (-inf, h_i], so a proper color of v_i must exceed h_i.
class RootedGainGraph {
 public:
  RootedGainGraph() = default;
  /// bounds[i - 1] is h_i; size must equal graph.order().
  RootedGainGraph(GainGraph graph, std::vector<Gain> bounds);

  [[nodiscard]] const GainGraph& graph() const noexcept { return graph_; }
  [[nodiscard]] int order() const noexcept { return graph_.order(); }
  [[nodiscard]] const std::vector<Gain>& bounds() const noexcept { return bounds_; }
  [[nodiscard]] Gain bound(Vertex v) const { return bounds_.at(static_cast<std::size_t>(v - 1)); }

  friend bool operator==(const RootedGainGraph&, const RootedGainGraph&) = default;

 private:
  GainGraph graph_;
  std::vector<Gain> bounds_;
};

/// eta: V -> Z, total on the nonroot vertices. values[i - 1] is eta_i.
struct SwitchingFunction {
  std::vector<Gain> values;

  [[nodiscard]] Gain operator()(Vertex v) const { return values.at(static_cast<std::size_t>(v - 1)); }
  friend bool operator==(const SwitchingFunction&, const SwitchingFunction&) = default;
};

/// theta with g = theta_j - theta_i on every edge of the set it certifies.
/// Stored for every vertex; vertices outside the set's support get 0.
struct Potential {
  std::vector<Gain> values;

  [[nodiscard]] Gain operator()(Vertex v) const { return values.at(static_cast<std::size_t>(v - 1)); }
  friend bool operator==(const Potential&, const Potential&) = default;
};

/// Certifying potential, normalized to minimum 0 on each component of
/// the subset, or nullopt when some circle in the subset has nonzero gain.
[[nodiscard]] std::optional<Potential> is_balanced(const GainGraph& graph,
                                                   std::span<const EdgeId> subset);

/// The blocks of pi(S): vertex sets of the components of (V, S), ordered by
/// their lowest vertex.
[[nodiscard]] std::vector<std::vector<Vertex>> partition(const GainGraph& graph,
                                                         std::span<const EdgeId> subset);

[[nodiscard]] GainGraph switched(const GainGraph& graph, const SwitchingFunction& eta);
/// Also shifts every bound: h_i -> h_i + eta_i.
[[nodiscard]] RootedGainGraph switched(const RootedGainGraph& rooted, const SwitchingFunction& eta);

/// eta_j = max gain of a path in B starting at v_j. Throws InvalidInput if B
/// is unbalanced.
[[nodiscard]] SwitchingFunction top_vertex_switching(const GainGraph& graph,
                                                     std::span<const EdgeId> balanced);

/// Contraction by a balanced set after top-vertex switching. Each block
/// collapses onto its lowest-indexed top vertex; surviving vertices are
/// renumbered 1..|pi(B)| in increasing order of that representative.
[[nodiscard]] GainGraph contract(const GainGraph& graph, std::span<const EdgeId> balanced);
/// As above; the merged vertex of block W gets bound max_{j in W}(h_j + eta_j).
[[nodiscard]] RootedGainGraph contract(const RootedGainGraph& rooted,
                                       std::span<const EdgeId> balanced);

[[nodiscard]] GainGraph delete_edge(const GainGraph& graph, EdgeId id);
[[nodiscard]] RootedGainGraph delete_edge(const RootedGainGraph& rooted, EdgeId id);

/// Adjoins the root with gain sets (-inf, 0]: every bound is 0.
[[nodiscard]] RootedGainGraph rooting(const GainGraph& graph);

/// I(x) = { g e_ij : x_j = x_i + g }. coloring[i - 1] is x_i.
[[nodiscard]] std::vector<EdgeId> improper_edges(const GainGraph& graph,
                                                 std::span<const Gain> coloring);

/// Phi_m: gains reduced to residues in [0, m). Loops keep min(r, m - r).
[[nodiscard]] GainGraph reduce_modulo(const GainGraph& graph, Gain modulus);

[[nodiscard]] Gain floor_mod(Gain value, Gain modulus) noexcept;

}  // namespace affino
