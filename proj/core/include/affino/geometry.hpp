// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "affino/bigint.hpp"
#include "affino/flats.hpp"
#include "affino/gain_graph.hpp"

#include <compare>
#include <cstdint>
#include <span>
#include <vector>

namespace affino {

/// The hyperplane x_j - x_i = g.
struct Hyperplane {
  Vertex i = 1;
  Vertex j = 2;
  Gain g = 0;

  friend auto operator<=>(const Hyperplane&, const Hyperplane&) = default;
};

/// Integral affinographic arrangement in R^n, stored with i < j, sorted and
/// without duplicates ((j, i, -g) is the same hyperplane as (i, j, g)).
class Arrangement {
 public:
  Arrangement() = default;
  Arrangement(int dimension, std::span<const Hyperplane> hyperplanes);

  [[nodiscard]] int dimension() const noexcept { return dimension_; }
  [[nodiscard]] const std::vector<Hyperplane>& hyperplanes() const noexcept { return hyperplanes_; }

  friend bool operator==(const Arrangement&, const Arrangement&) = default;

 private:
  int dimension_ = 0;
  std::vector<Hyperplane> hyperplanes_;
};

[[nodiscard]] GainGraph arrangement_to_gain_graph(const Arrangement& arrangement);
/// Inverse translation; throws InvalidInput on loops.
[[nodiscard]] Arrangement gain_graph_to_arrangement(const GainGraph& graph);

struct OracleOptions {
  /// Enumeration is refused when the box has at least this many points.
  std::uint64_t max_points = 100'000'000;
};

/// Points of [m]^n avoiding every hyperplane, by exhaustive enumeration.
[[nodiscard]] BigInt oracle_integral(const GainGraph& graph, Gain m, const OracleOptions& options = {});
/// Proper colorations in (Z_m)^n, by exhaustive enumeration.
[[nodiscard]] BigInt oracle_modular(const GainGraph& graph, Gain m, const OracleOptions& options = {});
/// Proper colorations with x_i in (h_i, m], by exhaustive enumeration.
/// Any gains are allowed, so this doubles as the rooted-graph oracle.
[[nodiscard]] BigInt oracle_interval(const GainGraph& graph, std::span<const Gain> bounds, Gain m,
                                     const OracleOptions& options = {});
[[nodiscard]] BigInt oracle_rooted(const RootedGainGraph& rooted, Gain m, const OracleOptions& options = {});

/// x_absorbed = x_top - offset
struct ConeEquation {
  Vertex absorbed = 1;
  Vertex top = 1;
  Gain offset = 0;

  friend bool operator==(const ConeEquation&, const ConeEquation&) = default;
};

/// Relatively open cone of one flat: x_top > bound for each surviving top
/// vertex, and one equation per absorbed vertex.
struct Cone {
  std::int64_t weight = 0;
  std::vector<std::pair<Vertex, Gain>> top_bounds;
  std::vector<ConeEquation> equations;

  [[nodiscard]] bool contains(std::span<const Gain> point) const;
  friend bool operator==(const Cone&, const Cone&) = default;
};

/// One cone per flat of the nonroot graph of the rooting, in flat order.
[[nodiscard]] std::vector<Cone> cone_decomposition(const GainGraph& graph, const FlatOptions& options = {});
[[nodiscard]] std::vector<Cone> cone_decomposition(const RootedGainGraph& rooted,
                                                   const FlatOptions& options = {});

/// Sum of the weights of the cones containing x. Throws InvalidInput on a
/// nonpositive coordinate.
[[nodiscard]] std::int64_t point_total_weight(std::span<const Cone> cones, std::span<const Gain> point);

}  // namespace affino
