#pragma once

#include <vector>

#include "tribound/algebra.hpp"

namespace tribound {

enum class CtSource { WeightedLength, RationalType, RankDim, ClassicalFormula, Kahler };

// Lower bound for the covering type of a space, hence for the vertex count
// f_0 of any triangulation.  Any closed d-manifold bound satisfies
// value >= d + 2 for d >= 1.
struct CtBound {
  BigInt value;
  CtSource source = CtSource::WeightedLength;
  bool refined = false;      // the +1 applied when the factor degrees are not all equal
  bool nonintegral = false;  // a closed form evaluated to a non-integer and was rounded up
};

// The exponents (m_1 <= ... <= m_l) of a compact Lie group whose rational
// cohomology is exterior on generators of degrees 2 m_j + 1.  l is the rank
// and the dimension satisfies d = l + 2 * sum(m_j).
class RationalType {
 public:
  RationalType() = default;
  explicit RationalType(std::vector<long> m);  // requires nondecreasing, nonnegative

  const std::vector<long>& exponents() const { return m_; }
  long rank() const { return static_cast<long>(m_.size()); }
  long dimension() const;

 private:
  std::vector<long> m_;
};

// Weighted length of the maximal nonzero product read off the presentation:
// each generator contributes its degree `height` times, the factor multiset
// i_1 <= ... <= i_L is sorted ascending (the arrangement maximizing
// sum k * i_k), and the bound is L + 1 + sum_k k * i_k, plus one more when
// the degrees are not all equal.  Throws EmptyPresentationError.
CtBound weighted_length_bound(const GradedPresentation& pres);

// l + 1 + sum_j j * (2 m_j + 1).  No +1 refinement: this follows the
// rational-type statement verbatim, so it can sit one below
// weighted_length_bound on the same group.  Documented behaviour.
CtBound rational_type_bound(const RationalType& rt);

// Minimum of rational_type_bound over every rational type with the given
// rank and dimension, by the closed form
//   (l+1)(l+2)/2 + 2 l M - q l (l-1) - r (r-1),
// where M = (d-l)/2, q = floor(M/l), r = M - q l.
// Throws ParityError when d - l is odd, RankError when d < l or l < 1.
CtBound rank_dim_bound(long d, long l);

enum class ClassicalFamily { Torus, U, SU, Sp, SO };

// Closed-form covering-type bounds per family:
//   Torus (n+1)(n+2)/2,   U  (4n^3+3n^2+5n+12)/6,  SU (4n^3-3n^2+5n+6)/6,
//   Sp (8n^3+13n^2+11n+12)/6,  SO (4n^3+3n^2+5n+12)/6.
// A non-integral evaluation (possible at boundary n) is rounded up and
// flagged `nonintegral`; a lower bound is safe to round up, truncation is
// not.  Throws DomainError for out-of-range n.
CtBound classical_ct_bound(ClassicalFamily family, long n);

// (m+1)^2 for a Kaehler or closed symplectic manifold of real dimension 2m.
CtBound kahler_ct_bound(long m);

}  // namespace tribound
