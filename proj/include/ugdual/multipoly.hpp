#pragma once

#include <map>
#include <string>
#include <vector>

#include "ugdual/rational.hpp"

namespace ugdual {

/// Commutative polynomial in t1..tp with exact coefficients, keyed by
/// exponent vectors. Zero coefficients are never stored.
class MultiPoly {
 public:
  using Exponents = std::vector<long>;

  MultiPoly() = default;
  explicit MultiPoly(std::size_t variables) : variables_(variables) {}

  [[nodiscard]] std::size_t variables() const { return variables_; }
  [[nodiscard]] const std::map<Exponents, Rational>& terms() const { return terms_; }
  [[nodiscard]] bool is_zero() const { return terms_.empty(); }
  [[nodiscard]] Rational coeff(const Exponents& e) const;
  void add_term(const Exponents& e, const Rational& c);

  [[nodiscard]] Rational evaluate(const std::vector<Rational>& point) const;
  /// Largest exponent of each variable.
  [[nodiscard]] std::vector<long> degree_bounds() const;

  /// Deterministic text: terms by descending total degree then descending
  /// exponents, e.g. "t1*t2 + 1/2*t1^2 + 1". Zero prints "0".
  [[nodiscard]] std::string str(const std::string& var = "t") const;

  friend bool operator==(const MultiPoly&, const MultiPoly&) = default;

 private:
  std::size_t variables_ = 0;
  std::map<Exponents, Rational> terms_;
};

}  // namespace ugdual
