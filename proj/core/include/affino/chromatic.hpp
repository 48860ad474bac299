// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "affino/bigint.hpp"
#include "affino/flats.hpp"
#include "affino/gain_graph.hpp"
#include "affino/polynomial.hpp"

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace affino {

/// One summand sign * mu * prod_i [m - r_i]^+.
struct Term {
  int sign = 1;
  std::int64_t mu = 1;
  /// Weakly decreasing.
  std::vector<Gain> roots;

  [[nodiscard]] int degree() const noexcept { return static_cast<int>(roots.size()); }
  friend bool operator==(const Term&, const Term&) = default;
};

/// Piecewise-polynomial form of an integral chromatic function. Terms are
/// ordered by decreasing degree, then by roots; for a rooting the first term
/// is {+1, 1, [0, ..., 0]}. An empty term list is the zero function.
struct TermSum {
  int order = 0;
  std::vector<Term> terms;

  friend bool operator==(const TermSum&, const TermSum&) = default;
};

/// One term per flat of the nonroot graph, merged by root multiset.
/// A zero-gain loop gives the zero TermSum.
[[nodiscard]] TermSum integral_terms(const RootedGainGraph& rooted, const FlatOptions& options = {});

/// sum_j sign_j mu_j prod_i max(m - r_ji, 0).
[[nodiscard]] BigInt eval_terms(const TermSum& terms, Gain m);

/// sum_j sign_j mu_j prod_i (x - r_ji): the function's value once m is at or
/// above every root.
[[nodiscard]] Polynomial collapsed_polynomial(const TermSum& terms);

/// Proper colorations with colors in [m]; 0 for m <= 0 unless the graph is empty.
[[nodiscard]] BigInt integral_chromatic(const GainGraph& graph, Gain m, const FlatOptions& options = {});
/// Proper colorations with x_i in (h_i, m].
[[nodiscard]] BigInt integral_chromatic(const RootedGainGraph& rooted, Gain m,
                                        const FlatOptions& options = {});

/// The same count by deletion-contraction on nonroot links, memoized on the
/// canonical rooted graph.
[[nodiscard]] BigInt integral_chromatic_dc(const RootedGainGraph& rooted, Gain m);

/// sum over flats of mu(bottom, B) x^{|pi(B)|}; the characteristic polynomial
/// of the corresponding arrangement. Zero if the graph has a zero-gain loop.
[[nodiscard]] Polynomial balanced_chromatic_polynomial(const GainGraph& graph,
                                                       const FlatOptions& options = {});

/// (-1)^n p(-1).
[[nodiscard]] BigInt region_count(const GainGraph& graph, const FlatOptions& options = {});

/// Proper colorations of an ordinary (all gains zero) graph with v_i colored
/// from (h_i, m]. bounds[i - 1] is h_i.
[[nodiscard]] BigInt interval_chromatic(const GainGraph& graph, std::span<const Gain> bounds, Gain m,
                                        const FlatOptions& options = {});

/// Proper colorations in Z_m with gains read mod m, computed over Lat^b(Phi_m).
[[nodiscard]] BigInt modular_chromatic(const GainGraph& graph, Gain m, FlatOptions options = {});

/// Loop-substitution rule over the integral semilattice: a flat contributes
/// 0 if one of its contraction loops has gain divisible by m, and
/// mu * m^{|pi(B)|} otherwise. Matches modular_chromatic only when m divides
/// no nonzero contraction loop gain (see modular_rule_applies).
[[nodiscard]] BigInt modular_paper_rule(const GainGraph& graph, Gain m, const FlatOptions& options = {});

/// True when m divides no nonzero loop gain of any flat.
[[nodiscard]] bool modular_rule_applies(const FlatSemilattice& lattice, Gain m);

/// (chi(Phi), chi(Phi \ e) - chi(Phi / e)) for the modular chromatic function.
[[nodiscard]] std::pair<BigInt, BigInt> modular_dc_check(const GainGraph& graph, EdgeId link, Gain m,
                                                         const FlatOptions& options = {});

}  // namespace affino
