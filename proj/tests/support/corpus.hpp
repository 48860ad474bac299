// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "affino/bigint.hpp"
#include "affino/gain_graph.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace affino::testing {

struct NamedGraph {
  std::string name;
  GainGraph graph;
};

/// Seeded random integral gain graphs: 1 <= n <= 4, at most 6 edge records,
/// gains in [-2, 2]. About one graph in ten carries a nonzero-gain loop.
std::vector<NamedGraph> random_corpus(std::uint64_t seed, std::size_t count);

/// Shi, Linial, extended Shi (s = 2), [0,2]K_n, [-1,1]K_n and K_n (all
/// gains 0) for 1 <= n <= max_n.
std::vector<NamedGraph> named_families(int max_n);

/// random_corpus(seed, count) followed by named_families(4).
std::vector<NamedGraph> standard_corpus(std::uint64_t seed = 20240917, std::size_t count = 200);

/// Underlying simple graph with every gain 0 and loops removed.
GainGraph zero_gain_shadow(const GainGraph& graph);

// ---- Brute-force helpers that do not use the library's balance or flat code.

/// Every circle as a bitmask over edge ids (graphs with at most 64 edges),
/// found by depth-first search for closed simple walks.
std::vector<std::uint64_t> circles(const GainGraph& graph);
/// Gain of a circle read around it in one direction; the sign is arbitrary.
Gain circle_gain(const GainGraph& graph, std::uint64_t circle);
/// max |phi(C)| over all circles, 0 when there are none.
Gain max_abs_circle_gain(const GainGraph& graph);
/// sum over balanced S of (-1)^|S| lambda^{b(S)}, by subset enumeration
/// (at most 20 edges).
BigInt subset_expansion(const GainGraph& graph, Gain lambda);

}  // namespace affino::testing
