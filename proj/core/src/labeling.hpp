// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "affino/gain_graph.hpp"

#include <optional>
#include <span>
#include <vector>

namespace affino::detail {

// Components of (V, S) with a potential on each. rep[i] is the lowest vertex
// of v_{i+1}'s component; theta[i] is relative to that vertex (theta = 0 there).
// modulus == 0 means integer gains, otherwise arithmetic is in Z_modulus.
struct Labeling {
  std::vector<Vertex> rep;
  std::vector<Gain> theta;
};

std::optional<Labeling> propagate(int order, const std::vector<Edge>& edges,
                                  std::span<const EdgeId> subset, Gain modulus);

// Shift theta within each component so its maximum is 0 (integral only).
void normalize_top_zero(Labeling& lab);

// Shift theta within each component so its minimum is 0 (integral only).
void normalize_bottom_zero(Labeling& lab);

void check_ids(const GainGraph& graph, std::span<const EdgeId> subset);

}  // namespace affino::detail
