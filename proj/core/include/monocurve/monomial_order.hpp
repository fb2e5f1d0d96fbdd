#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "monocurve/monomial.hpp"

namespace monocurve {

enum class OrderKind {
  lex,
  graded_lex,
  graded_revlex,
  // Weighted degree first, ties broken reverse-lexicographically.
  weighted,
  // Leading block compared first (weighted degree, then revlex), then the
  // remaining block the same way.
  block_elimination,
};

/// A monomial order on exponent vectors of a fixed length.
///
/// The permutation lists variable indices from most to least significant,
/// so lex with permutation {2, 1, 0, 3} is the lex order x2 > x1 > x0 > x3.
/// Weights are indexed by variable, not by permutation position.
class MonomialOrder {
 public:
  static MonomialOrder lex(std::vector<std::size_t> permutation);
  static MonomialOrder graded_lex(std::vector<std::size_t> permutation);
  static MonomialOrder graded_revlex(std::vector<std::size_t> permutation);
  static MonomialOrder weighted(std::vector<std::size_t> permutation,
                                std::vector<std::int64_t> weights);
  static MonomialOrder block_elimination(std::vector<std::size_t> permutation,
                                         std::vector<std::int64_t> weights,
                                         std::size_t block_split);

  // Identity-permutation shorthands.
  static MonomialOrder lex(std::size_t num_variables);
  static MonomialOrder graded_lex(std::size_t num_variables);
  static MonomialOrder graded_revlex(std::size_t num_variables);
  static MonomialOrder weighted(std::vector<std::int64_t> weights);

  std::strong_ordering compare(const Monomial& u, const Monomial& v) const;
  bool greater(const Monomial& u, const Monomial& v) const {
    return compare(u, v) == std::strong_ordering::greater;
  }

  /// The grading used for pair selection: weighted degree for weighted and
  /// block orders, total degree otherwise.
  std::int64_t degree(const Monomial& m) const;

  /// True if the order refines total degree.
  bool is_degree_compatible() const;

  /// Order on the ring with one extra (last) variable h: total degree
  /// first, then this order on the monomial with h removed. Leading
  /// monomials of homogenizations are homogenizations of leading monomials.
  MonomialOrder homogenized() const;

  OrderKind kind() const { return kind_; }
  std::size_t size() const { return permutation_.size(); }
  const std::vector<std::size_t>& permutation() const { return permutation_; }
  const std::vector<std::int64_t>& weights() const { return weights_; }
  std::size_t block_split() const { return block_split_; }
  std::optional<std::size_t> homogenizing_variable() const {
    return homogenizing_variable_;
  }

  std::string describe() const;

  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;

 private:
  MonomialOrder(OrderKind kind, std::vector<std::size_t> permutation,
                std::vector<std::int64_t> weights, std::size_t block_split);

  std::strong_ordering compare_base(const Monomial& u,
                                    const Monomial& v) const;

  OrderKind kind_;
  std::vector<std::size_t> permutation_;
  std::vector<std::int64_t> weights_;
  std::size_t block_split_ = 0;
  std::optional<std::size_t> homogenizing_variable_;
};

std::vector<std::size_t> identity_permutation(std::size_t n);

}  // namespace monocurve
