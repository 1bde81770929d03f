#include "tribound/algebra.hpp"

#include <algorithm>
#include <utility>

#include "tribound/errors.hpp"

namespace tribound {

GradedPresentation validate_presentation(GradedPresentation pres) {
  for (std::size_t i = 0; i < pres.generators.size(); ++i) {
    const Generator& g = pres.generators[i];
    if (g.degree < 1 || g.height < 1) {
      throw InvalidGeneratorError(
          "generator " + std::to_string(i) + " of '" + pres.name +
              "': degree and height must be >= 1, got degree=" +
              std::to_string(g.degree) + " height=" + std::to_string(g.height),
          static_cast<int>(i));
    }
  }
  std::sort(pres.generators.begin(), pres.generators.end(),
            [](const Generator& a, const Generator& b) {
              return std::pair(a.degree, a.height) < std::pair(b.degree, b.height);
            });
  return pres;
}

PoincarePolynomial::PoincarePolynomial(IntPoly poly) : poly_(std::move(poly)) {
  if (poly_.coeff(0) != 1) {
    throw Error("Poincare polynomial must have constant coefficient 1");
  }
  for (const BigInt& c : poly_.coeffs()) {
    if (c < 0) {
      throw Error("Poincare polynomial must have nonnegative coefficients");
    }
  }
}

BettiVector BettiVector::zeros(long d) {
  BettiVector b;
  b.d = d;
  b.betti.assign(static_cast<std::size_t>(d) + 1, BigInt(0));
  return b;
}

BettiVector BettiVector::from_coefficients(std::vector<BigInt> values) {
  if (values.empty()) {
    values.push_back(0);
  }
  values[0] = 0;  // reduced convention
  BettiVector b;
  b.d = static_cast<long>(values.size()) - 1;
  b.betti = std::move(values);
  return b;
}

PoincarePolynomial poincare_polynomial(const GradedPresentation& pres) {
  IntPoly product = IntPoly::one();
  for (const Generator& g : pres.generators) {
    std::vector<BigInt> factor(static_cast<std::size_t>(g.degree) * g.height + 1);
    for (int k = 0; k <= g.height; ++k) {
      factor[static_cast<std::size_t>(g.degree) * k] = 1;
    }
    product = product * IntPoly(std::move(factor));
  }
  return PoincarePolynomial(std::move(product));
}

BettiVector betti_vector(const PoincarePolynomial& pp) {
  return BettiVector::from_coefficients(pp.poly().coeffs());
}

long formal_dimension(const GradedPresentation& pres) {
  long d = 0;
  for (const Generator& g : pres.generators) {
    d += static_cast<long>(g.degree) * g.height;
  }
  return d;
}

}  // namespace tribound
