#pragma once

#include <string>
#include <vector>

#include "tribound/intpoly.hpp"

namespace tribound {

// A multiplicative generator of a graded presentation.  `height` is the
// largest power of the generator that survives in the algebra: an exterior
// generator has height 1, a truncation relation x^a = 0 gives height a - 1.
// Storing heights instead of truncation exponents keeps exterior and
// truncated generators uniform; catalog entries translate a -> a - 1 once,
// at definition time.
struct Generator {
  int degree = 0;
  int height = 0;
  bool operator==(const Generator&) const = default;
};

// Presents a cohomology algebra as exterior (x) truncated-polynomial.  The
// coefficient field is carried as a label only; no field arithmetic is ever
// performed, the label merely selects a presentation.
struct GradedPresentation {
  std::string name;
  std::string field_label = "custom";
  std::vector<Generator> generators;
};

// Checks the Generator invariants (degree >= 1, height >= 1) and returns the
// presentation with generators sorted by (degree, height).  An empty
// generator list is valid and denotes the one-point space.  Throws
// InvalidGeneratorError carrying the index of the first offender.
GradedPresentation validate_presentation(GradedPresentation pres);

// Coefficient of t^i is dim H^i.  Invariants: constant coefficient 1
// (connected space) and every coefficient nonnegative.
class PoincarePolynomial {
 public:
  explicit PoincarePolynomial(IntPoly poly);
  const IntPoly& poly() const { return poly_; }
  long dimension() const { return poly_.degree(); }

 private:
  IntPoly poly_;
};

// Reduced Betti numbers beta_0..beta_d; the reduced convention beta_0 = 0
// is forced at construction.
struct BettiVector {
  long d = 0;
  std::vector<BigInt> betti;  // size d + 1, betti[0] == 0

  static BettiVector zeros(long d);
  // Takes raw coefficients (index = degree); the 0-entry is zeroed.
  static BettiVector from_coefficients(std::vector<BigInt> values);
};

// prod over generators of (1 + t^deg + t^(2 deg) + ... + t^(height * deg)),
// expanded exactly.
PoincarePolynomial poincare_polynomial(const GradedPresentation& pres);

BettiVector betti_vector(const PoincarePolynomial& pp);

// sum of height * degree over the generators; this equals the degree of the
// Poincare polynomial and, for catalog entries, the dimension of the group.
long formal_dimension(const GradedPresentation& pres);

}  // namespace tribound
