#pragma once

#include <cstdint>
#include <vector>

#include "monocurve/semigroup.hpp"

namespace monocurve {

/// Kraft's description of the derivation module of k[[t^n0, ..., t^np]]:
/// it is minimally generated by t^(alpha+1) d/dt for alpha in
/// delta_prime and alpha = 0.
struct KraftData {
  std::vector<std::int64_t> delta_prime;
  std::int64_t mu = 1;
  std::vector<std::int64_t> generator_exponents;
};

/// Gaps alpha with alpha + s in S for every nonzero s in S.
std::vector<std::int64_t> delta_prime(const NumericalSemigroup& s);

KraftData derivation_rank(const NumericalSemigroup& s);

}  // namespace monocurve
