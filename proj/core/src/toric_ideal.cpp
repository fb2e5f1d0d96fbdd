#include "monocurve/toric_ideal.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "monocurve/errors.hpp"

namespace monocurve {

namespace {

NumericalSemigroup validated_semigroup(const std::vector<std::int64_t>& n) {
  if (n.empty()) throw ValidationError("a curve needs at least one exponent");
  if (n.size() + 1 > kMaxVariables) {
    throw ValidationError("too many exponents for the supported ring size");
  }
  std::set<std::int64_t> distinct(n.begin(), n.end());
  if (distinct.size() != n.size()) {
    throw ValidationError("curve exponents must be distinct");
  }
  return NumericalSemigroup(std::span<const std::int64_t>(n));
}

}  // namespace

MonomialCurve::MonomialCurve(std::vector<std::int64_t> exponents)
    : exponents_(std::move(exponents)),
      semigroup_(validated_semigroup(exponents_)) {
  if (semigroup_.minimal_generators().size() != exponents_.size()) {
    throw ValidationError(
        "curve exponents are not a minimal generating system");
  }
}

MonomialOrder curve_order(const MonomialCurve& curve) {
  return MonomialOrder::weighted(std::vector<std::int64_t>(
      curve.exponents().begin(), curve.exponents().end()));
}

GroebnerBasis defining_ideal_basis(const MonomialCurve& curve,
                                   std::size_t max_basis_size) {
  const auto n = curve.num_variables();
  const auto t = n;  // index of the parameter variable
  std::vector<std::size_t> perm{t};
  for (std::size_t i = 0; i < n; ++i) perm.push_back(i);
  std::vector<std::int64_t> weights(curve.exponents().begin(),
                                    curve.exponents().end());
  weights.push_back(1);
  auto elimination =
      MonomialOrder::block_elimination(std::move(perm), std::move(weights), 1);

  std::vector<Polynomial> gens;
  for (std::size_t i = 0; i < n; ++i) {
    gens.push_back(Polynomial::binomial(
        Monomial::variable(n + 1, i),
        Monomial::variable(n + 1, t,
                           static_cast<Monomial::Exponent>(curve.exponents()[i]))));
  }
  BuchbergerOptions options;
  options.max_basis_size = max_basis_size;
  auto gb = reduce_basis(buchberger(gens, elimination, options));

  std::vector<Polynomial> kernel;
  for (const auto& g : gb.generators()) {
    if (g.is_free_of(t)) kernel.push_back(g.truncated(n));
  }
  auto order = curve_order(curve);
  std::stable_sort(kernel.begin(), kernel.end(),
                   [&](const Polynomial& a, const Polynomial& b) {
                     return order.greater(a.leading_monomial(order),
                                          b.leading_monomial(order));
                   });
  return GroebnerBasis(std::move(kernel), order);
}

GradedIdealPresentation defining_ideal(const MonomialCurve& curve,
                                       std::size_t max_basis_size) {
  auto gb = defining_ideal_basis(curve, max_basis_size);
  return GradedIdealPresentation{
      gb.generators(),
      std::vector<std::int64_t>(curve.exponents().begin(),
                                curve.exponents().end()),
      gb.order(), false, std::nullopt};
}

GradedIdealPresentation minimal_generators(
    const GradedIdealPresentation& pres) {
  for (const auto& g : pres.generators) {
    if (!g.is_homogeneous(pres.weights)) {
      throw ValidationError("minimal_generators needs homogeneous generators");
    }
  }
  std::vector<Polynomial> sorted;
  for (const auto& g : pres.generators) {
    if (!g.is_zero()) sorted.push_back(g);
  }
  std::stable_sort(sorted.begin(), sorted.end(),
                   [&](const Polynomial& a, const Polynomial& b) {
                     return a.weighted_degree(pres.weights) <
                            b.weighted_degree(pres.weights);
                   });

  std::vector<Polynomial> kept;
  std::vector<Polynomial> kept_basis;
  for (const auto& g : sorted) {
    if (!kept.empty()) {
      GroebnerBasis gb(kept_basis, pres.order);
      if (ideal_contains(gb, g)) continue;
    }
    kept.push_back(g);
    kept_basis.push_back(g);
    kept_basis = buchberger(kept_basis, pres.order).generators();
  }
  GradedIdealPresentation out{std::move(kept), pres.weights, pres.order, true,
                              std::nullopt};
  out.beta1 = out.generators.size();
  return out;
}

Polynomial eta(const Polynomial& f, const MonomialCurve& curve) {
  if (f.num_variables() != curve.num_variables()) {
    throw ValidationError("polynomial does not live in the curve's ring");
  }
  std::vector<Polynomial> images;
  for (auto e : curve.exponents()) {
    images.push_back(Polynomial::from_monomial(
        Monomial::variable(1, 0, static_cast<Monomial::Exponent>(e))));
  }
  return f.substitute(images);
}

bool eta_check(std::span<const Polynomial> polys, const MonomialCurve& curve) {
  return std::all_of(polys.begin(), polys.end(), [&](const Polynomial& f) {
    return eta(f, curve).is_zero();
  });
}

}  // namespace monocurve
