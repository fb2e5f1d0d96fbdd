#include "monocurve/monomial.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "monocurve/errors.hpp"

namespace monocurve {

namespace {

void check_size(std::size_t n) {
  if (n > kMaxVariables) {
    throw ValidationError("at most " + std::to_string(kMaxVariables) +
                          " variables are supported, got " +
                          std::to_string(n));
  }
}

Monomial::Exponent checked_add(Monomial::Exponent a, Monomial::Exponent b) {
  constexpr auto kMax = std::numeric_limits<std::int32_t>::max();
  if (static_cast<std::uint64_t>(a) + b > static_cast<std::uint64_t>(kMax)) {
    throw GuardViolation("monomial exponent overflow");
  }
  return a + b;
}

}  // namespace

Monomial::Monomial(std::size_t num_variables)
    : size_(static_cast<std::uint8_t>(num_variables)) {
  check_size(num_variables);
}

Monomial::Monomial(std::initializer_list<Exponent> exponents)
    : Monomial(std::span<const Exponent>(exponents.begin(), exponents.size())) {}

Monomial::Monomial(std::span<const Exponent> exponents)
    : size_(static_cast<std::uint8_t>(exponents.size())) {
  check_size(exponents.size());
  std::copy(exponents.begin(), exponents.end(), exponents_.begin());
}

Monomial Monomial::variable(std::size_t num_variables, std::size_t index,
                            Exponent power) {
  Monomial m(num_variables);
  if (index >= num_variables) {
    throw ValidationError("variable index out of range");
  }
  m.exponents_[index] = power;
  return m;
}

std::uint64_t Monomial::total_degree() const {
  std::uint64_t d = 0;
  for (std::size_t i = 0; i < size_; ++i) d += exponents_[i];
  return d;
}

std::int64_t Monomial::weighted_degree(
    std::span<const std::int64_t> weights) const {
  std::int64_t d = 0;
  for (std::size_t i = 0; i < size_; ++i) {
    d += static_cast<std::int64_t>(exponents_[i]) * weights[i];
  }
  return d;
}

bool Monomial::is_one() const {
  for (std::size_t i = 0; i < size_; ++i) {
    if (exponents_[i] != 0) return false;
  }
  return true;
}

bool Monomial::divides(const Monomial& other) const {
  for (std::size_t i = 0; i < size_; ++i) {
    if (exponents_[i] > other.exponents_[i]) return false;
  }
  return true;
}

bool Monomial::coprime(const Monomial& other) const {
  for (std::size_t i = 0; i < size_; ++i) {
    if (exponents_[i] != 0 && other.exponents_[i] != 0) return false;
  }
  return true;
}

Monomial Monomial::lcm(const Monomial& other) const {
  Monomial r(*this);
  for (std::size_t i = 0; i < size_; ++i) {
    r.exponents_[i] = std::max(exponents_[i], other.exponents_[i]);
  }
  return r;
}

Monomial Monomial::gcd(const Monomial& other) const {
  Monomial r(*this);
  for (std::size_t i = 0; i < size_; ++i) {
    r.exponents_[i] = std::min(exponents_[i], other.exponents_[i]);
  }
  return r;
}

Monomial Monomial::quotient(const Monomial& divisor) const {
  Monomial r(*this);
  for (std::size_t i = 0; i < size_; ++i) {
    r.exponents_[i] -= divisor.exponents_[i];
  }
  return r;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial r(*this);
  r *= other;
  return r;
}

Monomial& Monomial::operator*=(const Monomial& other) {
  for (std::size_t i = 0; i < size_; ++i) {
    exponents_[i] = checked_add(exponents_[i], other.exponents_[i]);
  }
  return *this;
}

Monomial Monomial::extended(Exponent last) const {
  check_size(size_ + 1u);
  Monomial r(*this);
  r.exponents_[size_] = last;
  r.size_ = static_cast<std::uint8_t>(size_ + 1);
  return r;
}

Monomial Monomial::truncated(std::size_t n) const {
  Monomial r(n);
  std::copy_n(exponents_.begin(), std::min<std::size_t>(n, size_),
              r.exponents_.begin());
  return r;
}

}  // namespace monocurve
