#include "tribound/intpoly.hpp"

#include <utility>

namespace tribound {

namespace {
const BigInt kZero = 0;
}

IntPoly::IntPoly(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) {
  while (!coeffs_.empty() && coeffs_.back() == 0) {
    coeffs_.pop_back();
  }
}

IntPoly IntPoly::one() { return IntPoly(std::vector<BigInt>{1}); }

const BigInt& IntPoly::coeff(long i) const {
  if (i < 0 || i >= static_cast<long>(coeffs_.size())) {
    return kZero;
  }
  return coeffs_[static_cast<std::size_t>(i)];
}

BigInt IntPoly::eval(const BigInt& x) const {
  BigInt acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * x + *it;
  }
  return acc;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) {
    return IntPoly();
  }
  std::vector<BigInt> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      if (b.coeffs_[j] == 0) continue;
      out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return IntPoly(std::move(out));
}

}  // namespace tribound
