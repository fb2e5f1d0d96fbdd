#include "monocurve/semigroup.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "monocurve/errors.hpp"

namespace monocurve {

namespace {

// True iff target is a nonnegative combination of gens.
bool representable(const std::vector<std::int64_t>& gens,
                   std::int64_t target) {
  std::vector<bool> reach(static_cast<std::size_t>(target) + 1, false);
  reach[0] = true;
  for (std::int64_t x = 1; x <= target; ++x) {
    for (auto g : gens) {
      if (g <= x && reach[static_cast<std::size_t>(x - g)]) {
        reach[static_cast<std::size_t>(x)] = true;
        break;
      }
    }
  }
  return reach[static_cast<std::size_t>(target)];
}

}  // namespace

NumericalSemigroup::NumericalSemigroup(std::span<const std::int64_t> gens,
                                       std::int64_t table_limit) {
  if (gens.empty()) throw ValidationError("empty generator list");
  std::int64_t g = 0;
  for (auto n : gens) {
    if (n <= 0) {
      throw ValidationError("generators must be positive, got " +
                            std::to_string(n));
    }
    g = std::gcd(g, n);
  }
  if (g != 1) throw ValidationError("not a numerical semigroup (gcd != 1)");

  std::vector<std::int64_t> sorted(gens.begin(), gens.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  if (sorted.back() > table_limit) {
    throw GuardViolation("generator exceeds the membership table limit");
  }
  for (auto n : sorted) {
    if (generators_.empty() || !representable(generators_, n)) {
      generators_.push_back(n);
    }
  }

  const std::int64_t n0 = generators_.front();
  const std::int64_t np = generators_.back();
  if (n0 > table_limit / np) {
    throw GuardViolation("Frobenius bound " + std::to_string(n0) + "*" +
                         std::to_string(np) + " exceeds the table limit");
  }
  const auto bound = static_cast<std::size_t>(n0 * np);
  std::vector<bool> table(bound + 1, false);
  table[0] = true;
  for (std::size_t x = 1; x <= bound; ++x) {
    for (auto n : generators_) {
      auto step = static_cast<std::size_t>(n);
      if (step <= x && table[x - step]) {
        table[x] = true;
        break;
      }
    }
  }
  std::size_t c = bound + 1;
  while (c > 0 && table[c - 1]) --c;
  conductor_ = static_cast<std::int64_t>(c);
  table.resize(c);
  membership_ = std::move(table);
}

bool NumericalSemigroup::contains(std::int64_t x) const {
  if (x < 0) return false;
  if (x >= conductor_) return true;
  return membership_[static_cast<std::size_t>(x)];
}

AperySet NumericalSemigroup::apery_set(std::int64_t a) const {
  if (a <= 0 || !contains(a)) {
    throw ValidationError("Apery set base must be a nonzero element, got " +
                          std::to_string(a));
  }
  AperySet ap{a, std::vector<std::int64_t>(static_cast<std::size_t>(a), -1)};
  std::int64_t found = 0;
  for (std::int64_t x = 0; found < a; ++x) {
    auto& slot = ap.elements[static_cast<std::size_t>(x % a)];
    if (slot < 0 && contains(x)) {
      slot = x;
      ++found;
    }
  }
  return ap;
}

std::vector<std::int64_t> NumericalSemigroup::gaps() const {
  std::vector<std::int64_t> out;
  for (std::int64_t x = 1; x < conductor_; ++x) {
    if (!contains(x)) out.push_back(x);
  }
  return out;
}

std::int64_t NumericalSemigroup::genus() const {
  return static_cast<std::int64_t>(gaps().size());
}

bool NumericalSemigroup::is_symmetric() const {
  const auto f = frobenius();
  if ((f % 2 + 2) % 2 != 1) return false;
  // Negative x need no check: f - x > f is always an element.
  for (std::int64_t x = 0; x <= f; ++x) {
    if (!contains(x) && !contains(f - x)) return false;
  }
  return true;
}

SemigroupInvariants NumericalSemigroup::invariants() const {
  return {multiplicity(), embedding_dimension(), frobenius(), conductor(),
          genus()};
}

}  // namespace monocurve
