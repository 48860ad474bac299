// SPDX-License-Identifier: Apache-2.0
#include "affino/families.hpp"

#include "affino/errors.hpp"

#include <string>
#include <vector>

namespace affino {

std::optional<Family> parse_family(std::string_view name) {
  if (name == "interval-Kn") return Family::IntervalComplete;
  if (name == "shi") return Family::Shi;
  if (name == "ext-shi") return Family::ExtendedShi;
  if (name == "linial") return Family::Linial;
  return std::nullopt;
}

std::string_view family_name(Family family) noexcept {
  switch (family) {
    case Family::IntervalComplete: return "interval-Kn";
    case Family::Shi: return "shi";
    case Family::ExtendedShi: return "ext-shi";
    case Family::Linial: return "linial";
  }
  return "";
}

GainGraph interval_complete_graph(int n, Gain a, Gain b) {
  if (n < 0) throw InvalidInput("n must be nonnegative");
  if (a > b) throw InvalidInput("gain interval [a,b] needs a <= b");
  std::vector<Edge> edges;
  for (Vertex i = 1; i <= n; ++i) {
    for (Vertex j = i + 1; j <= n; ++j) {
      for (Gain g = a; g <= b; ++g) edges.push_back({i, j, g});
    }
  }
  return GainGraph(n, edges);
}

GainGraph family_graph(const FamilySpec& spec) {
  if (spec.n < 1) throw InvalidInput("family order n must be at least 1");
  switch (spec.name) {
    case Family::IntervalComplete: return interval_complete_graph(spec.n, spec.a, spec.b);
    case Family::Shi: return interval_complete_graph(spec.n, 0, 1);
    case Family::ExtendedShi:
      if (spec.s < 1) throw InvalidInput("extended Shi needs s >= 1");
      return interval_complete_graph(spec.n, 1 - spec.s, spec.s);
    case Family::Linial: return interval_complete_graph(spec.n, 1, 1);
  }
  throw InvalidInput("unknown family");
}

BigInt eulerian(int n, int k) {
  if (n < 1 || k < 1 || k > n) throw InvalidInput("eulerian(n, k) needs 1 <= k <= n");
  // row[k] = A(row, k)
  std::vector<BigInt> row{0, 1};
  for (int r = 2; r <= n; ++r) {
    std::vector<BigInt> next(static_cast<std::size_t>(r) + 1, 0);
    for (int j = 1; j <= r; ++j) {
      BigInt same = j < r ? row[static_cast<std::size_t>(j)] : BigInt(0);
      next[static_cast<std::size_t>(j)] = j * same + (r - j + 1) * row[static_cast<std::size_t>(j - 1)];
    }
    row = std::move(next);
  }
  return row[static_cast<std::size_t>(k)];
}

BigInt binomial(Gain x, int k) {
  if (k < 0 || x < k) return 0;
  BigInt out = 1;
  for (int i = 0; i < k; ++i) {
    out *= x - i;
    out /= i + 1;
  }
  return out;
}

BigInt shi_closed_form(int n, Gain s, Gain m) {
  if (n < 1 || s < 1) throw InvalidInput("shi_closed_form needs n >= 1 and s >= 1");
  if (m < n + (s - 1) * (n - 1)) return 0;
  BigInt base = m - s * (n - 1);
  BigInt out = 1;
  for (int i = 0; i < n; ++i) out *= base;
  return out;
}

BigInt zero_b_closed_form(int n, Gain b, Gain m) {
  if (n < 1 || b < 0) throw InvalidInput("zero_b_closed_form needs n >= 1 and b >= 0");
  if (m < 0) return 0;
  BigInt total = 0;
  for (int r = 0; r < n; ++r) {
    if (b > 0 && static_cast<Gain>(r) > m / b) break;
    total += eulerian(n, r + 1) * binomial(m - b * r, n);
  }
  return total;
}

BigInt ab_closed_form(int n, Gain lo, Gain hi, Gain m) {
  if (lo > 0) throw InvalidInput("ab_closed_form needs an interval [-a, b] with a >= 0");
  const Gain a = -lo;
  if (a > hi) throw InvalidInput("ab_closed_form needs a <= b for the interval [-a, b]");
  if (n < 1) throw InvalidInput("n must be at least 1");
  const Gain shift = static_cast<Gain>(n - 1) * a;
  if (m < shift) return 0;
  return zero_b_closed_form(n, hi - a, m - shift);
}

BigInt one_bminus1_closed_form(int n, Gain b, Gain m) {
  if (n < 1 || b < 1) throw InvalidInput("one_bminus1_closed_form needs n >= 1 and b >= 1");
  if (m < 0) throw InvalidInput("one_bminus1_closed_form needs m >= 0");
  BigInt total = 0;
  const Gain top = m + n - 1;
  for (int r = 0; r < n && static_cast<Gain>(r) <= top / b; ++r) {
    total += eulerian(n, r + 1) * binomial(top - b * r, n);
  }
  return total;
}

namespace {

// sum_r A(n, r+1) C(x + offset - b r, n), accumulated over n! to stay integral.
Polynomial eulerian_sum_polynomial(int n, Gain offset, Gain b) {
  BigInt factorial = 1;
  for (int i = 1; i <= n; ++i) factorial *= i;
  Polynomial scaled;
  for (int r = 0; r < n; ++r) {
    Polynomial falling = Polynomial::constant(1);
    for (int i = 0; i < n; ++i) falling = falling * Polynomial::linear(BigInt(i) - (offset - b * r));
    scaled += falling * eulerian(n, r + 1);
  }
  std::vector<BigInt> coeffs = scaled.coefficients();
  for (BigInt& c : coeffs) {
    if (c % factorial != 0) throw Error("Eulerian sum polynomial has non-integral coefficients");
    c /= factorial;
  }
  return Polynomial(std::move(coeffs));
}

}  // namespace

Polynomial zero_b_polynomial(int n, Gain b) {
  if (n < 1 || b < 0) throw InvalidInput("zero_b_polynomial needs n >= 1 and b >= 0");
  return eulerian_sum_polynomial(n, 0, b);
}

Polynomial one_bminus1_polynomial(int n, Gain b) {
  if (n < 1 || b < 1) throw InvalidInput("one_bminus1_polynomial needs n >= 1 and b >= 1");
  return eulerian_sum_polynomial(n, n - 1, b);
}

bool odd_zero_check(int n, Gain b) {
  if (n < 3 || n % 2 == 0) throw InvalidInput("odd_zero_check needs odd n >= 3");
  if (b < 2) throw InvalidInput("odd_zero_check needs b >= 2");
  const Gain k = (n - 1) / 2;
  return one_bminus1_polynomial(n, b)(BigInt((b - 1) * k)) == 0;
}

std::optional<BigInt> family_closed_form(const FamilySpec& spec, Gain m) {
  switch (spec.name) {
    case Family::Shi: return shi_closed_form(spec.n, 1, m);
    case Family::ExtendedShi: return shi_closed_form(spec.n, spec.s, m);
    case Family::Linial:
      if (m < 0) return BigInt(0);
      return one_bminus1_closed_form(spec.n, 2, m);
    case Family::IntervalComplete:
      if (spec.a <= 0 && -spec.a <= spec.b) return ab_closed_form(spec.n, spec.a, spec.b, m);
      if (spec.a == 1 && m >= 0) return one_bminus1_closed_form(spec.n, spec.b + 1, m);
      return std::nullopt;
  }
  return std::nullopt;
}

}  // namespace affino
