#include "tribound/face_bounds.hpp"

#include <string>
#include <utility>

#include "tribound/covering_type.hpp"
#include "tribound/errors.hpp"

namespace tribound {

BigInt face_bound(long i, long d, const BigInt& f0, const BettiVector& betti) {
  if (betti.d != d || static_cast<long>(betti.betti.size()) != d + 1) {
    throw DimensionMismatchError("face_bound: Betti vector length must be d+1");
  }
  if (i < 0 || i > d) {
    throw IndexError("face_bound: index " + std::to_string(i) +
                     " outside 0.." + std::to_string(d));
  }
  if (d == 0) {
    return f0;  // a point; the formulas below assume d >= 1
  }
  const auto& b = betti.betti;
  const long jmax = (d + 2) / 2;
  BigInt v;
  if (i < d) {
    v = f0 * binomial(d + 1, i) - i * binomial(d + 2, i + 1);
    BigInt s = 0;
    for (long j = 0; j <= i; ++j) {
      if (b[j] != 0) s += binomial(i, j) * b[j];
    }
    v += binomial(d + 1, i + 1) * s;
    for (long j = 2; j <= jmax; ++j) {
      if (b[j - 1] == 0) continue;
      v += (binomial(d + 2 - j, d + 1 - i) - binomial(j, d + 1 - i)) *
           binomial(d + 1, j - 1) * b[j - 1];
    }
  } else {
    v = f0 * d - BigInt(d + 2) * (d - 1);
    for (long j = 0; j <= d - 1; ++j) {
      if (b[j] != 0) v += binomial(d, j) * b[j];
    }
    for (long j = 2; j <= jmax; ++j) {
      if (b[j - 1] == 0) continue;
      v += BigInt(d + 2 - 2 * j) * binomial(d + 1, j - 1) * b[j - 1];
    }
  }
  return v;
}

FaceBoundVector face_bound_vector(long d, const BigInt& f0, const BettiVector& betti) {
  reserve_binomials(d + 2);
  FaceBoundVector out;
  out.d = d;
  out.f0_input = f0;
  out.bounds.reserve(static_cast<std::size_t>(d) + 1);
  for (long i = 0; i <= d; ++i) {
    out.bounds.push_back(face_bound(i, d, f0, betti));
  }
  return out;
}

BigInt total_bound(const FaceBoundVector& v) {
  BigInt total = 0;
  for (const BigInt& x : v.bounds) {
    total += x;
  }
  return total;
}

namespace {

struct FamilyData {
  BigInt d;
  long l;
  CtBound f0;
};

FamilyData family_data(FacetFamily family, long n) {
  switch (family) {
    case FacetFamily::U:
      return {BigInt(n) * n, n, classical_ct_bound(ClassicalFamily::U, n)};
    case FacetFamily::SU:
      if (n < 2) throw DomainError("classical_facet_bound: SU requires n >= 2");
      return {BigInt(n) * n - 1, n - 1, classical_ct_bound(ClassicalFamily::SU, n)};
    case FacetFamily::SO_odd:
      return {BigInt(n) * (2 * n + 1), n,
              classical_ct_bound(ClassicalFamily::SO, 2 * n + 1)};
    case FacetFamily::SO_even:
      if (n < 2) throw DomainError("classical_facet_bound: SO_even requires n >= 2");
      return {BigInt(n) * (2 * n - 1), n,
              classical_ct_bound(ClassicalFamily::SO, 2 * n)};
    case FacetFamily::Sp:
      return {BigInt(n) * (2 * n + 1), n, classical_ct_bound(ClassicalFamily::Sp, n)};
  }
  throw DomainError("classical_facet_bound: unknown family");
}

// numerator / denom rounded up; flags the rounding.
BigInt ceil_div(const BigInt& num, long denom, bool& rounded) {
  if (num % denom == 0) {
    return num / denom;
  }
  rounded = true;
  return num / denom + 1;
}

BigInt pow2(long e) {
  BigInt v = 1;
  return v << e;
}

}  // namespace

FacetBound classical_facet_bound(FacetFamily family, long n) {
  if (n < 1) {
    throw DomainError("classical_facet_bound: n must be >= 1");
  }
  const FamilyData fd = family_data(family, n);
  FacetBound out;
  out.nonintegral = fd.f0.nonintegral;
  out.derived = fd.f0.value * fd.d - (fd.d + 2) * (fd.d - 1) + pow2(fd.l) - 1;

  const BigInt nn(n);
  BigInt num;
  long denom = 6;
  switch (family) {
    case FacetFamily::U:
      num = 4 * nn * nn * nn * nn * nn - 3 * nn * nn * nn * nn +
            5 * nn * nn * nn + 6 * nn * nn + 12;
      break;
    case FacetFamily::SU:
      num = 4 * nn * nn * nn * nn * nn - 9 * nn * nn * nn * nn +
            nn * nn * nn + 15 * nn * nn + 6;
      break;
    case FacetFamily::SO_odd:
      // Recorded with k in place of n in the lower-order terms; evaluated
      // reading k as n.
      num = 32 * nn * nn * nn * nn * nn + 64 * nn * nn * nn * nn +
            64 * nn * nn * nn + 38 * nn * nn + 9 * nn + 6;
      denom = 3;
      break;
    case FacetFamily::SO_even:
      num = 32 * nn * nn * nn * nn * nn - 16 * nn * nn * nn * nn +
            16 * nn * nn * nn - 2 * nn * nn - 3 * nn + 6;
      denom = 3;
      break;
    case FacetFamily::Sp:
      num = 8 * nn * nn * nn * nn * nn + 15 * nn * nn * nn * nn +
            12 * nn * nn * nn + 11 * nn * nn + 6 * nn + 12;
      break;
  }
  // closed_form = num/denom + 2^l - 1, rounded up when the division is inexact.
  bool rounded = false;
  out.closed_form = ceil_div(num, denom, rounded) + pow2(fd.l) - 1;
  out.nonintegral = out.nonintegral || rounded;
  out.agree = out.derived == out.closed_form;
  return out;
}

FacetBound kahler_facet_bound(long m) {
  if (m < 1) {
    throw DomainError("kahler_facet_bound: m must be >= 1");
  }
  const long d = 2 * m;
  BettiVector betti = BettiVector::zeros(d);
  for (long j = 1; j < m; ++j) {
    betti.betti[static_cast<std::size_t>(2 * j)] = 1;
  }
  betti.betti[static_cast<std::size_t>(d)] = 1;

  FacetBound out;
  out.derived = face_bound(d, d, kahler_ct_bound(m).value, betti);
  out.closed_form = BigInt(2) * m * m * m + 2 * m + pow2(2 * (m - 1));
  out.agree = out.derived == out.closed_form;
  return out;
}

}  // namespace tribound
