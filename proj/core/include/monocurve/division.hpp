#pragma once

#include <span>
#include <vector>

#include "monocurve/monomial_order.hpp"
#include "monocurve/polynomial.hpp"

namespace monocurve {

/// dividend = sum(quotients[i] * divisors[i]) + remainder, with no term of
/// the remainder divisible by a leading monomial of a divisor and
/// Lm(quotients[i] * divisors[i]) <= Lm(dividend) whenever nonzero.
struct DivisionRecord {
  std::vector<Polynomial> quotients;
  Polynomial remainder;
};

/// Multivariate division. At each step the first divisor whose leading
/// monomial divides the current leading monomial is used.
DivisionRecord divide(const Polynomial& dividend,
                      std::span<const Polynomial> divisors,
                      const MonomialOrder& order);

/// Remainder only; same reduction path as divide().
Polynomial remainder(const Polynomial& dividend,
                     std::span<const Polynomial> divisors,
                     const MonomialOrder& order);

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g,
                        const MonomialOrder& order);

}  // namespace monocurve
