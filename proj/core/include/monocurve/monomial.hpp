#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>

namespace monocurve {

inline constexpr std::size_t kMaxVariables = 16;

/// Exponent vector of a monomial in a ring with at most kMaxVariables
/// variables. Stored inline so that products and comparisons never allocate.
class Monomial {
 public:
  using Exponent = std::uint32_t;

  Monomial() = default;
  explicit Monomial(std::size_t num_variables);
  Monomial(std::initializer_list<Exponent> exponents);
  explicit Monomial(std::span<const Exponent> exponents);

  /// The monomial x_index in a ring with num_variables variables.
  static Monomial variable(std::size_t num_variables, std::size_t index,
                           Exponent power = 1);

  std::size_t size() const { return size_; }
  Exponent operator[](std::size_t i) const { return exponents_[i]; }
  Exponent& operator[](std::size_t i) { return exponents_[i]; }
  std::span<const Exponent> exponents() const {
    return {exponents_.data(), size_};
  }

  std::uint64_t total_degree() const;
  std::int64_t weighted_degree(std::span<const std::int64_t> weights) const;
  bool is_one() const;

  /// True iff this monomial divides other.
  bool divides(const Monomial& other) const;
  bool coprime(const Monomial& other) const;

  Monomial lcm(const Monomial& other) const;
  Monomial gcd(const Monomial& other) const;
  /// this / divisor; the caller guarantees divisor | this.
  Monomial quotient(const Monomial& divisor) const;

  Monomial operator*(const Monomial& other) const;
  Monomial& operator*=(const Monomial& other);

  /// Copy with one more variable appended carrying the given exponent.
  Monomial extended(Exponent last) const;
  /// Copy keeping only the first n variables.
  Monomial truncated(std::size_t n) const;

  // Canonical (order-independent) comparison: lexicographic on raw indices.
  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend std::strong_ordering operator<=>(const Monomial& a,
                                          const Monomial& b) {
    if (auto c = a.exponents_ <=> b.exponents_; c != 0) return c;
    return a.size_ <=> b.size_;
  }

 private:
  std::array<Exponent, kMaxVariables> exponents_{};
  std::uint8_t size_ = 0;
};

}  // namespace monocurve
