// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "affino/gain_graph.hpp"

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace affino {

struct FlatOptions {
  /// Enumeration fails with FlatLimitExceeded once more flats than this exist.
  std::size_t max_flats = 1'000'000;
  /// 0 enumerates Lat^b of the integral graph; m >= 1 enumerates Lat^b(Phi_m).
  Gain modulus = 0;
};

/// A closed balanced edge set together with the data every counting formula
/// reads off it.
struct BalancedFlat {
  /// Sorted ids into the graph the flat was computed on.
  std::vector<EdgeId> edges;
  /// pi(B), singletons included, ordered by lowest member.
  std::vector<std::vector<Vertex>> blocks;
  /// block_of[i - 1] indexes `blocks`.
  std::vector<std::size_t> block_of;
  /// Integral: top vertices 0, others negative (this is -eta).
  /// Modular: residues with the block's lowest vertex at 0.
  std::vector<Gain> potential;
  /// Integral only: h_B(W) per block, the largest path gain inside W.
  std::vector<Gain> heights;
  /// Integral only: |gain| of each loop of Phi/B after top-vertex switching,
  /// sorted. Zero loops of the graph show up here as 0.
  std::vector<Gain> loop_gains;

  [[nodiscard]] std::size_t block_count() const noexcept { return blocks.size(); }
  [[nodiscard]] int rank() const noexcept {
    return static_cast<int>(block_of.size()) - static_cast<int>(blocks.size());
  }
  [[nodiscard]] Gain eta(Vertex v) const { return -potential.at(static_cast<std::size_t>(v - 1)); }
  /// Lowest-indexed vertex with eta = 0 in block `b` (integral flats).
  [[nodiscard]] Vertex top_vertex(std::size_t b) const;
};

/// Minimal closed superset of a balanced set. Throws InvalidInput if `subset`
/// is unbalanced (in Z, or in Z_modulus when modulus > 0; the ids then refer
/// to reduce_modulo(graph, modulus)).
[[nodiscard]] BalancedFlat closure(const GainGraph& graph, std::span<const EdgeId> subset,
                                   Gain modulus = 0);

/// Lat^b with its Moebius function mu(bottom, -).
class FlatSemilattice {
 public:
  FlatSemilattice(GainGraph graph, Gain modulus, std::vector<BalancedFlat> flats,
                  std::vector<std::int64_t> mobius);

  /// The graph the edge ids refer to (the reduced graph for modular lattices).
  [[nodiscard]] const GainGraph& graph() const noexcept { return graph_; }
  [[nodiscard]] Gain modulus() const noexcept { return modulus_; }
  [[nodiscard]] std::size_t size() const noexcept { return flats_.size(); }
  [[nodiscard]] const std::vector<BalancedFlat>& flats() const noexcept { return flats_; }
  [[nodiscard]] const BalancedFlat& operator[](std::size_t i) const { return flats_.at(i); }
  [[nodiscard]] std::int64_t mobius(std::size_t i) const { return mobius_.at(i); }
  [[nodiscard]] const std::vector<std::int64_t>& mobius() const noexcept { return mobius_; }

  /// Containment of edge sets.
  [[nodiscard]] bool leq(std::size_t lower, std::size_t upper) const;

 private:
  GainGraph graph_;
  Gain modulus_;
  std::vector<BalancedFlat> flats_;
  std::vector<std::int64_t> mobius_;
};

/// Every closed balanced set exactly once, sorted by (rank, partition,
/// potential). Index 0 is the bottom flat, the closure of the empty set.
[[nodiscard]] FlatSemilattice enumerate_flats(const GainGraph& graph, const FlatOptions& options = {});

/// max_{v_j in W} (h_j + eta_j) per block of an integral flat of rooted.graph().
[[nodiscard]] std::vector<Gain> rooted_heights(const RootedGainGraph& rooted, const BalancedFlat& flat);

/// Forests F within the flat with pi(F) = pi(flat) that contain no balanced
/// circle minus its last edge under `ordering` (a permutation of the graph's
/// edge ids). Brute force over subsets; flats above 24 edges are rejected
/// with ResourceLimit.
[[nodiscard]] std::uint64_t nbc_forest_count(const GainGraph& graph, const BalancedFlat& flat,
                                             std::span<const EdgeId> ordering);

}  // namespace affino
