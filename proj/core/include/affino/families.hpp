// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "affino/bigint.hpp"
#include "affino/gain_graph.hpp"
#include "affino/polynomial.hpp"

#include <optional>
#include <string>
#include <string_view>

namespace affino {

enum class Family { IntervalComplete, Shi, ExtendedShi, Linial };

struct FamilySpec {
  Family name = Family::Shi;
  int n = 1;
  /// Gain interval [a, b]; used by Family::IntervalComplete.
  Gain a = 0;
  Gain b = 0;
  /// Extension parameter; used by Family::ExtendedShi.
  Gain s = 1;
};

/// "interval-Kn", "shi", "ext-shi", "linial".
[[nodiscard]] std::optional<Family> parse_family(std::string_view name);
[[nodiscard]] std::string_view family_name(Family family) noexcept;

/// [a,b]K_n: every pair i < j joined by g e_ij for each a <= g <= b.
[[nodiscard]] GainGraph interval_complete_graph(int n, Gain a, Gain b);
/// Shi = [0,1]K_n, extended Shi = [1-s, s]K_n, Linial = [1,1]K_n.
[[nodiscard]] GainGraph family_graph(const FamilySpec& spec);

/// Eulerian number A(n, k): permutations of [n] with k - 1 ascents.
[[nodiscard]] BigInt eulerian(int n, int k);

/// C(x, k) with the convention C(x, k) = 0 whenever x < k.
[[nodiscard]] BigInt binomial(Gain x, int k);

/// Extended Shi count: [m - s(n-1)]^n once m >= n + (s-1)(n-1), else 0.
[[nodiscard]] BigInt shi_closed_form(int n, Gain s, Gain m);

/// [0,b]K_n: sum_r A(n, r+1) C(m - b r, n) for m >= 0, else 0. b = 0 sums
/// over every r, which gives the falling factorial of the complete graph.
[[nodiscard]] BigInt zero_b_closed_form(int n, Gain b, Gain m);

/// [lo,hi]K_n for lo <= 0 <= -lo <= hi, by shrinking the [lo,-lo] part away:
/// the count of [0, hi + lo]K_n at m - (n-1)(-lo).
[[nodiscard]] BigInt ab_closed_form(int n, Gain lo, Gain hi, Gain m);

/// [1,b-1]K_n: sum_r A(n, r+1) C(m + n - 1 - b r, n) for m >= 0.
/// Linial is b = 2.
[[nodiscard]] BigInt one_bminus1_closed_form(int n, Gain b, Gain m);

/// The untruncated sum for [0,b]K_n as a polynomial in m; equal to the
/// count for m >= b(n-1).
[[nodiscard]] Polynomial zero_b_polynomial(int n, Gain b);
/// The untruncated sum for [1,b-1]K_n as a polynomial in m; equal to the
/// count for m >= (b-1)(n-1).
[[nodiscard]] Polynomial one_bminus1_polynomial(int n, Gain b);

/// Whether one_bminus1_polynomial(n, b) vanishes at (b-1)(n-1)/2, n odd.
[[nodiscard]] bool odd_zero_check(int n, Gain b);

/// Closed-form count for a family member when one of the formulas above
/// covers it.
[[nodiscard]] std::optional<BigInt> family_closed_form(const FamilySpec& spec, Gain m);

}  // namespace affino
