#pragma once

#include <vector>

#include "tribound/bigint.hpp"

namespace tribound {

// Dense polynomial with exact integer coefficients, indexed by exponent.
// Canonical form stores no trailing zero coefficients; the zero polynomial
// is the empty vector and reports degree -1.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<BigInt> coeffs);

  static IntPoly one();

  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }

  // Coefficient of t^i; zero outside the stored range.
  const BigInt& coeff(long i) const;
  const std::vector<BigInt>& coeffs() const { return coeffs_; }

  BigInt eval(const BigInt& x) const;

  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  bool operator==(const IntPoly&) const = default;

 private:
  std::vector<BigInt> coeffs_;
};

}  // namespace tribound
