#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "monocurve/groebner.hpp"
#include "monocurve/monomial_order.hpp"
#include "monocurve/polynomial.hpp"
#include "monocurve/semigroup.hpp"

namespace monocurve {

/// The affine monomial curve t -> (t^n0, ..., t^np) in k[x0, ..., xp].
///
/// Exponents keep the caller's order, since variable x_i is tied to the i-th
/// exponent; as a set they must be a minimal generating system of a
/// numerical semigroup.
class MonomialCurve {
 public:
  explicit MonomialCurve(std::vector<std::int64_t> exponents);

  const std::vector<std::int64_t>& exponents() const { return exponents_; }
  /// wt(x_i) = n_i.
  std::span<const std::int64_t> weights() const { return exponents_; }
  std::size_t num_variables() const { return exponents_.size(); }
  const NumericalSemigroup& semigroup() const { return semigroup_; }

 private:
  std::vector<std::int64_t> exponents_;
  NumericalSemigroup semigroup_;
};

/// Weighted reverse-lex order with wt(x_i) = n_i.
MonomialOrder curve_order(const MonomialCurve& curve);

struct GradedIdealPresentation {
  std::vector<Polynomial> generators;
  std::vector<std::int64_t> weights;
  MonomialOrder order;
  bool minimal = false;
  std::optional<std::size_t> beta1;
};

/// Reduced Groebner basis of ker(eta) under curve_order(), computed by
/// eliminating t from <x_i - t^{n_i}>.
GroebnerBasis defining_ideal_basis(const MonomialCurve& curve,
                                   std::size_t max_basis_size = 0);

GradedIdealPresentation defining_ideal(const MonomialCurve& curve,
                                       std::size_t max_basis_size = 0);

/// Greedy minimalization: ascending weighted degree (stable), dropping each
/// generator already in the ideal of those kept. Throws ValidationError on a
/// non-homogeneous generator.
GradedIdealPresentation minimal_generators(const GradedIdealPresentation& pres);

/// True iff every polynomial maps to zero under x_i -> t^{n_i}.
bool eta_check(std::span<const Polynomial> polys, const MonomialCurve& curve);

/// Image of f under x_i -> t^{n_i}, as a polynomial in the single variable t.
Polynomial eta(const Polynomial& f, const MonomialCurve& curve);

}  // namespace monocurve
