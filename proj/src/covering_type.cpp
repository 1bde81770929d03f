#include "tribound/covering_type.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "tribound/errors.hpp"

namespace tribound {

RationalType::RationalType(std::vector<long> m) : m_(std::move(m)) {
  for (std::size_t j = 0; j < m_.size(); ++j) {
    if (m_[j] < 0) {
      throw DomainError("rational type: exponents must be nonnegative");
    }
    if (j > 0 && m_[j] < m_[j - 1]) {
      throw DomainError("rational type: exponents must be nondecreasing");
    }
  }
}

long RationalType::dimension() const {
  long sum = 0;
  for (long m : m_) sum += m;
  return rank() + 2 * sum;
}

CtBound weighted_length_bound(const GradedPresentation& pres) {
  if (pres.generators.empty()) {
    throw EmptyPresentationError("weighted length bound needs at least one generator");
  }
  std::vector<long> factors;
  for (const Generator& g : pres.generators) {
    for (int k = 0; k < g.height; ++k) {
      factors.push_back(g.degree);
    }
  }
  std::sort(factors.begin(), factors.end());

  BigInt value = static_cast<long>(factors.size()) + 1;
  for (std::size_t k = 0; k < factors.size(); ++k) {
    value += BigInt(k + 1) * factors[k];
  }
  const bool refined = factors.front() != factors.back();
  if (refined) {
    value += 1;
  }
  return {std::move(value), CtSource::WeightedLength, refined, false};
}

CtBound rational_type_bound(const RationalType& rt) {
  BigInt value = rt.rank() + 1;
  const auto& m = rt.exponents();
  for (std::size_t j = 0; j < m.size(); ++j) {
    value += BigInt(j + 1) * (2 * m[j] + 1);
  }
  return {std::move(value), CtSource::RationalType, false, false};
}

CtBound rank_dim_bound(long d, long l) {
  if (l < 1 || d < l) {
    throw RankError("rank_dim_bound: requires d >= l >= 1, got d=" +
                    std::to_string(d) + " l=" + std::to_string(l));
  }
  if ((d - l) % 2 != 0) {
    throw ParityError("rank_dim_bound: d - l must be even, got d=" +
                      std::to_string(d) + " l=" + std::to_string(l));
  }
  const long M = (d - l) / 2;
  const long q = M / l;
  const long r = M - q * l;
  BigInt value = BigInt(l + 1) * (l + 2) / 2;
  value += BigInt(2) * l * M;
  value -= BigInt(q) * l * (l - 1);
  value -= BigInt(r) * (r - 1);
  return {std::move(value), CtSource::RankDim, false, false};
}

namespace {

// value = num / 6, rounded up when 6 does not divide num.
CtBound sixth(BigInt num, bool& rounded) {
  rounded = num % 6 != 0;
  if (rounded) {
    num += 5;
  }
  return {num / 6, CtSource::ClassicalFormula, false, rounded};
}

}  // namespace

CtBound classical_ct_bound(ClassicalFamily family, long n) {
  const long min_n = family == ClassicalFamily::SO ? 2 : 1;
  if (n < min_n) {
    throw DomainError("classical_ct_bound: n out of range for the family");
  }
  const BigInt nn(n);
  bool rounded = false;
  switch (family) {
    case ClassicalFamily::Torus:
      return {(nn + 1) * (nn + 2) / 2, CtSource::ClassicalFormula, false, false};
    case ClassicalFamily::U:
    case ClassicalFamily::SO:
      return sixth(4 * nn * nn * nn + 3 * nn * nn + 5 * nn + 12, rounded);
    case ClassicalFamily::SU:
      return sixth(4 * nn * nn * nn - 3 * nn * nn + 5 * nn + 6, rounded);
    case ClassicalFamily::Sp:
      return sixth(8 * nn * nn * nn + 13 * nn * nn + 11 * nn + 12, rounded);
  }
  throw DomainError("classical_ct_bound: unknown family");
}

CtBound kahler_ct_bound(long m) {
  if (m < 1) {
    throw DomainError("kahler_ct_bound: m must be >= 1");
  }
  return {BigInt(m + 1) * (m + 1), CtSource::Kahler, false, false};
}

}  // namespace tribound
