#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace monocurve {

/// Ap(S, a): for each residue class modulo a, the least element of S in it.
struct AperySet {
  std::int64_t base = 0;
  /// elements[r] is the least element of S congruent to r mod base.
  std::vector<std::int64_t> elements;
};

struct SemigroupInvariants {
  std::int64_t multiplicity;
  std::int64_t embedding_dimension;
  std::int64_t frobenius;
  std::int64_t conductor;
  std::int64_t genus;
};

/// A numerical semigroup given by its minimal system of generators.
///
/// Immutable after construction. Membership is answered from a table that
/// covers 0..conductor-1; everything at or above the conductor is in S.
class NumericalSemigroup {
 public:
  /// Reduces gens to the minimal generating system. Throws ValidationError
  /// on empty input, nonpositive entries, or gcd != 1 ("not a numerical
  /// semigroup"). Throws GuardViolation if the Frobenius bound n0 * np
  /// exceeds table_limit.
  explicit NumericalSemigroup(std::span<const std::int64_t> gens,
                              std::int64_t table_limit = 50'000'000);
  NumericalSemigroup(std::initializer_list<std::int64_t> gens)
      : NumericalSemigroup(std::span<const std::int64_t>(gens.begin(),
                                                         gens.size())) {}

  const std::vector<std::int64_t>& minimal_generators() const {
    return generators_;
  }

  bool contains(std::int64_t x) const;

  /// Throws ValidationError unless a is a nonzero element.
  AperySet apery_set(std::int64_t a) const;

  /// -1 for the semigroup of all nonnegative integers.
  std::int64_t frobenius() const { return conductor_ - 1; }
  std::int64_t conductor() const { return conductor_; }
  std::int64_t multiplicity() const { return generators_.front(); }
  std::int64_t embedding_dimension() const {
    return static_cast<std::int64_t>(generators_.size());
  }
  std::vector<std::int64_t> gaps() const;
  std::int64_t genus() const;
  bool is_symmetric() const;
  SemigroupInvariants invariants() const;

  friend bool operator==(const NumericalSemigroup& a,
                         const NumericalSemigroup& b) {
    return a.generators_ == b.generators_;
  }

 private:
  std::vector<std::int64_t> generators_;
  std::int64_t conductor_ = 0;
  // membership_[x] for 0 <= x < conductor_.
  std::vector<bool> membership_;
};

}  // namespace monocurve
