#include "monocurve/derivations.hpp"

#include <algorithm>

namespace monocurve {

std::vector<std::int64_t> delta_prime(const NumericalSemigroup& s) {
  // alpha + (S \ {0}) lies in S as soon as alpha + n_i does for every minimal
  // generator n_i: any nonzero element is n_i + s' with s' in S, and
  // (alpha + n_i) + s' stays in S by additive closure. Only gaps qualify.
  std::vector<std::int64_t> out;
  const auto& gens = s.minimal_generators();
  for (auto alpha : s.gaps()) {
    if (std::all_of(gens.begin(), gens.end(),
                    [&](auto n) { return s.contains(alpha + n); })) {
      out.push_back(alpha);
    }
  }
  return out;
}

KraftData derivation_rank(const NumericalSemigroup& s) {
  KraftData data;
  data.delta_prime = delta_prime(s);
  data.mu = static_cast<std::int64_t>(data.delta_prime.size()) + 1;
  data.generator_exponents.push_back(1);
  for (auto alpha : data.delta_prime) {
    data.generator_exponents.push_back(alpha + 1);
  }
  return data;
}

}  // namespace monocurve
