// Sparse Puiseux polynomials: finite sums of c * t^e with rational exponents
// and rational coefficients. Supports the t-adic valuation (min exponent).
#pragma once

#include <map>
#include <optional>
#include <vector>

#include "selfdual/rational.hpp"

namespace sd {

class Puiseux {
 public:
  Puiseux() = default;
  explicit Puiseux(const Rat& constant);
  // c * t^e
  static Puiseux term(const Rat& coeff, const Rat& exponent);

  bool is_zero() const { return terms_.empty(); }
  // Valuation: min exponent with nonzero coefficient; nullopt for zero.
  std::optional<Rat> valuation() const;
  // Coefficient at a given exponent (zero if absent).
  Rat coeff(const Rat& exponent) const;

  Puiseux operator+(const Puiseux& o) const;
  Puiseux operator-(const Puiseux& o) const;
  Puiseux operator-() const;
  Puiseux operator*(const Puiseux& o) const;

  bool operator==(const Puiseux& o) const = default;

  const std::map<Rat, Rat>& terms() const { return terms_; }

 private:
  void add_term(const Rat& e, const Rat& c);
  std::map<Rat, Rat> terms_;  // exponent -> nonzero coefficient
};

// Determinant of a square matrix of Puiseux entries, by column-subset
// dynamic programming (no division: the ring is not a field).
Puiseux puiseux_det(const std::vector<std::vector<Puiseux>>& m);

}  // namespace sd
