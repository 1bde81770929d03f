#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace tribound {

// Exact signed integer of unbounded size.  The largest values produced by
// the face-number pipeline exceed 10^121, so fixed-width types are out.
using BigInt = boost::multiprecision::cpp_int;

// C(n, k), exact.  Returns 0 for k < 0 or k > n; the face-bound sums rely on
// that convention instead of guarding their binomial arguments.  Backed by a
// growing table of Pascal rows that is safe for concurrent callers.
BigInt binomial(long n, long k);

// Pre-builds the cached rows 0..n so later lookups do no construction work.
void reserve_binomials(long n);

}  // namespace tribound
