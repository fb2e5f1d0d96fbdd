#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "monocurve/monomial.hpp"
#include "monocurve/monomial_order.hpp"

namespace monocurve {

using Rational = mpq_class;

struct Term {
  Rational coefficient;
  Monomial monomial;

  friend bool operator==(const Term&, const Term&) = default;
};

/// Sparse polynomial over the rationals in a ring with a fixed number of
/// variables.
///
/// Terms are kept sorted strictly descending under the canonical monomial
/// comparison (not under any particular monomial order) and no zero
/// coefficient is ever stored, so equality is structural. Leading data is
/// always taken with respect to an explicit MonomialOrder.
class Polynomial {
 public:
  explicit Polynomial(std::size_t num_variables = 0)
      : num_variables_(num_variables) {}

  static Polynomial constant(std::size_t num_variables, const Rational& c);
  static Polynomial from_monomial(const Monomial& m, const Rational& c = 1);
  /// Sums like terms and drops zeros.
  static Polynomial from_terms(std::size_t num_variables,
                               std::vector<Term> terms);
  /// The pure-difference binomial x^u - x^v.
  static Polynomial binomial(const Monomial& u, const Monomial& v);

  std::size_t num_variables() const { return num_variables_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const std::vector<Term>& terms() const { return terms_; }

  /// Nonzero constant (degree-zero) polynomial.
  bool is_constant() const;
  /// True iff the polynomial is x^u - x^v with u != v.
  bool is_pure_binomial() const;
  /// True iff every term has the same weighted degree.
  bool is_homogeneous(std::span<const std::int64_t> weights) const;
  /// Weighted degree of the first term (meaningful for homogeneous input).
  std::int64_t weighted_degree(std::span<const std::int64_t> weights) const;
  std::uint64_t total_degree() const;

  const Term& leading_term(const MonomialOrder& order) const;
  const Monomial& leading_monomial(const MonomialOrder& order) const {
    return leading_term(order).monomial;
  }
  const Rational& leading_coefficient(const MonomialOrder& order) const {
    return leading_term(order).coefficient;
  }
  /// Scaled so the leading coefficient is 1.
  Polynomial monic(const MonomialOrder& order) const;

  Polynomial operator-() const;
  Polynomial operator+(const Polynomial& other) const;
  Polynomial operator-(const Polynomial& other) const;
  Polynomial operator*(const Polynomial& other) const;
  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);

  Polynomial scaled(const Rational& c) const;
  Polynomial times_term(const Rational& c, const Monomial& m) const;
  /// this -= c * m * other, in one merge pass.
  void subtract_multiple(const Rational& c, const Monomial& m,
                         const Polynomial& other);
  void add_term(const Rational& c, const Monomial& m);

  /// Replace x_i by images[i]; all images must share one ring.
  Polynomial substitute(std::span<const Polynomial> images) const;
  Rational evaluate(std::span<const Rational> point) const;

  /// Same polynomial in a ring with extra trailing variables.
  Polynomial extended(std::size_t num_variables) const;
  /// Drop trailing variables; their exponents must all be zero.
  Polynomial truncated(std::size_t num_variables) const;
  /// True iff no term involves variable index.
  bool is_free_of(std::size_t index) const;

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  void check_ring(const Polynomial& other) const;

  std::size_t num_variables_;
  std::vector<Term> terms_;
};

Polynomial pow(const Polynomial& base, std::uint64_t exponent);

}  // namespace monocurve
