#pragma once

#include <vector>

#include "tribound/algebra.hpp"

namespace tribound {

// Exact lower bounds for the face numbers f_0..f_d of any triangulation.
struct FaceBoundVector {
  long d = 0;
  BigInt f0_input;
  std::vector<BigInt> bounds;  // size d + 1; bounds[i] is the bound for f_i
};

// Lower bound for f_i of a connected closed d-manifold with f_0 >= f0 and
// the given reduced Betti numbers:
//
//   i < d:  f0*C(d+1,i) - i*C(d+2,i+1)
//           + C(d+1,i+1) * sum_{j=0..i} C(i,j) b_j
//           + sum_{j=2..floor((d+2)/2)}
//               [C(d+2-j, d+1-i) - C(j, d+1-i)] * C(d+1, j-1) * b_{j-1}
//
//   i = d:  f0*d - (d+2)(d-1) + sum_{j=0..d-1} C(d,j) b_j
//           + sum_{j=2..floor((d+2)/2)} (d+2-2j) * C(d+1, j-1) * b_{j-1}
//
// Out-of-range binomials contribute 0.  For d = 0 the only bound is f0
// itself.  Throws DimensionMismatchError when betti has length != d+1 and
// IndexError when i is outside 0..d.
BigInt face_bound(long i, long d, const BigInt& f0, const BettiVector& betti);

FaceBoundVector face_bound_vector(long d, const BigInt& f0, const BettiVector& betti);

// Sum of all entries: a bound on the total number of simplices.
BigInt total_bound(const FaceBoundVector& v);

enum class FacetFamily { U, SU, SO_odd, SO_even, Sp };

// A facet bound computed two ways: `derived` re-runs the truncated top-degree
// formula f0*d - (d+2)(d-1) + (2^l - 1) with the family's (d, l) data and ct
// bound, while `closed_form` evaluates the recorded per-family polynomial
// plus 2^l - 1.  The two are compared rather than trusted to coincide; the
// derived value is the canonical output.
struct FacetBound {
  BigInt derived;
  BigInt closed_form;
  bool agree = false;
  bool nonintegral = false;  // some rational evaluation was rounded up
};

// Families: U(n) with d = n^2, l = n; SU(n) d = n^2-1, l = n-1;
// SO(2n+1) and Sp(n) d = n(2n+1), l = n; SO(2n) d = n(2n-1), l = n.
// Requires n >= 1 (n >= 2 for SU and SO_even).
FacetBound classical_facet_bound(FacetFamily family, long n);

// Derived: the i = d = 2m face bound with f0 = (m+1)^2 and b_{2j} = 1 for
// 1 <= j <= m-1, b_{2m} = 1.  Closed form: 2m^3 + 2m + 2^(2(m-1)).
FacetBound kahler_facet_bound(long m);

}  // namespace tribound
