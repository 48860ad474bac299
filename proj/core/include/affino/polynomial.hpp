// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "affino/bigint.hpp"

#include <string>
#include <vector>

namespace affino {

/// Dense univariate polynomial with integer coefficients, ascending degree.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<BigInt> ascending);

  static Polynomial constant(BigInt c);
  static Polynomial monomial(unsigned degree, BigInt c = 1);
  /// (x - root)
  static Polynomial linear(BigInt root);

  /// -1 for the zero polynomial.
  [[nodiscard]] int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  [[nodiscard]] bool is_zero() const noexcept { return coeffs_.empty(); }
  [[nodiscard]] const std::vector<BigInt>& coefficients() const noexcept { return coeffs_; }
  [[nodiscard]] BigInt coefficient(unsigned k) const;

  [[nodiscard]] BigInt operator()(const BigInt& x) const;

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const BigInt& c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const BigInt& c) { return a *= c; }
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  /// Human-readable form in the variable `var`, e.g. "x^3 - 3*x^2 + 6*x - 4".
  [[nodiscard]] std::string to_string(const std::string& var = "x") const;

 private:
  void trim();
  std::vector<BigInt> coeffs_;
};

}  // namespace affino
