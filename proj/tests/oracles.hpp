#pragma once

// Independent oracles used by the test suites.  Everything here deliberately
// avoids the code paths of the library it checks: binomials are built with
// the additive Pascal rule (the library uses the multiplicative one), the
// Poincare histogram enumerates monomials one by one instead of convolving,
// and the rational-type minimum is exhaustive search.

#include <vector>

#include "tribound/algebra.hpp"
#include "tribound/bigint.hpp"
#include "tribound/covering_type.hpp"

namespace oracles {

// Pascal's triangle rows 0..max_n via C(n,k) = C(n-1,k-1) + C(n-1,k).
inline std::vector<std::vector<tribound::BigInt>> pascal_rows(long max_n) {
  std::vector<std::vector<tribound::BigInt>> rows;
  for (long n = 0; n <= max_n; ++n) {
    std::vector<tribound::BigInt> row(static_cast<std::size_t>(n) + 1);
    row.front() = 1;
    row.back() = 1;
    for (long k = 1; k < n; ++k) {
      row[static_cast<std::size_t>(k)] =
          rows.back()[static_cast<std::size_t>(k - 1)] +
          rows.back()[static_cast<std::size_t>(k)];
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

// Histogram of the degrees of every monomial prod g^(k_g), 0 <= k_g <=
// height(g), enumerated with an explicit odometer.
inline std::vector<tribound::BigInt> monomial_histogram(
    const tribound::GradedPresentation& pres) {
  long top = 0;
  for (const auto& g : pres.generators) {
    top += static_cast<long>(g.degree) * g.height;
  }
  std::vector<tribound::BigInt> hist(static_cast<std::size_t>(top) + 1);
  std::vector<int> exps(pres.generators.size(), 0);
  while (true) {
    long degree = 0;
    for (std::size_t i = 0; i < exps.size(); ++i) {
      degree += static_cast<long>(exps[i]) * pres.generators[i].degree;
    }
    hist[static_cast<std::size_t>(degree)] += 1;
    std::size_t pos = 0;
    while (pos < exps.size() && exps[pos] == pres.generators[pos].height) {
      exps[pos] = 0;
      ++pos;
    }
    if (pos == exps.size()) {
      break;
    }
    ++exps[pos];
  }
  return hist;
}

// Exhaustive minimum of rational_type_bound over every nondecreasing
// nonnegative (m_1..m_l) with sum (d - l) / 2.
inline tribound::BigInt brute_min_rational_type(long d, long l) {
  const long target = (d - l) / 2;
  tribound::BigInt best = -1;
  std::vector<long> m(static_cast<std::size_t>(l));
  auto rec = [&](auto&& self, long pos, long remaining, long lower) -> void {
    if (pos == l) {
      if (remaining != 0) return;
      tribound::BigInt v = tribound::rational_type_bound(tribound::RationalType(m)).value;
      if (best < 0 || v < best) best = v;
      return;
    }
    for (long val = lower; val <= remaining; ++val) {
      m[static_cast<std::size_t>(pos)] = val;
      self(self, pos + 1, remaining - val, val);
    }
  };
  rec(rec, 0, target, 0);
  return best;
}

}  // namespace oracles
