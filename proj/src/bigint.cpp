#include "tribound/bigint.hpp"

#include <mutex>
#include <stdexcept>
#include <utility>
#include <vector>

namespace tribound {
namespace {

// Rows of Pascal's triangle.  Each row is filled with the multiplicative
// recurrence C(n,k) = C(n,k-1)*(n-k+1)/k, in which the division is always
// exact; the additive Pascal rule is kept free for use as an independent
// oracle in the tests.
class BinomialCache {
 public:
  static BinomialCache& instance() {
    static BinomialCache cache;
    return cache;
  }

  BigInt get(long n, long k) {
    std::lock_guard<std::mutex> lock(mu_);
    grow(n);
    return rows_[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
  }

  void grow_to(long n) {
    std::lock_guard<std::mutex> lock(mu_);
    grow(n);
  }

 private:
  void grow(long n) {
    while (static_cast<long>(rows_.size()) <= n) {
      const long m = static_cast<long>(rows_.size());
      std::vector<BigInt> row(static_cast<std::size_t>(m) + 1);
      row[0] = 1;
      for (long k = 1; k <= m; ++k) {
        row[static_cast<std::size_t>(k)] =
            row[static_cast<std::size_t>(k - 1)] * (m - k + 1) / k;
      }
      rows_.push_back(std::move(row));
    }
  }

  std::vector<std::vector<BigInt>> rows_;
  std::mutex mu_;
};

}  // namespace

BigInt binomial(long n, long k) {
  if (n < 0) {
    throw std::invalid_argument("binomial: n must be nonnegative");
  }
  if (k < 0 || k > n) {
    return 0;
  }
  return BinomialCache::instance().get(n, k);
}

void reserve_binomials(long n) {
  if (n >= 0) {
    BinomialCache::instance().grow_to(n);
  }
}

}  // namespace tribound
