#pragma once

// Independent oracles shared by the unit and acceptance suites. Nothing here
// calls into the code paths being checked.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "monocurve/polynomial.hpp"

namespace monocurve::testing {

/// reach[x] == x is a nonnegative combination of gens, for 0 <= x <= limit.
inline std::vector<bool> representable_table(
    const std::vector<std::int64_t>& gens, std::int64_t limit) {
  std::vector<bool> reach(static_cast<std::size_t>(limit) + 1, false);
  reach[0] = true;
  // Unbounded knapsack, generator-major.
  for (auto g : gens) {
    for (std::int64_t x = g; x <= limit; ++x) {
      if (reach[static_cast<std::size_t>(x - g)]) {
        reach[static_cast<std::size_t>(x)] = true;
      }
    }
  }
  return reach;
}

/// Largest non-representable integer below limit, or -1.
inline std::int64_t brute_frobenius(const std::vector<std::int64_t>& gens,
                                    std::int64_t limit) {
  auto reach = representable_table(gens, limit);
  for (std::int64_t x = limit; x >= 0; --x) {
    if (!reach[static_cast<std::size_t>(x)]) return x;
  }
  return -1;
}

/// Minimal generating subset by brute force: drop any generator that is a
/// combination of the others.
inline std::vector<std::int64_t> brute_minimal(std::vector<std::int64_t> gens) {
  std::set<std::int64_t> s(gens.begin(), gens.end());
  std::vector<std::int64_t> out;
  for (auto g : s) {
    std::vector<std::int64_t> others;
    for (auto h : s) {
      if (h != g) others.push_back(h);
    }
    if (!representable_table(others, g)[static_cast<std::size_t>(g)]) {
      out.push_back(g);
    }
  }
  return out;
}

/// All minimal generating systems {n0 < ... < n_{k-1}} with entries in
/// [2, max_entry] and gcd 1.
inline std::vector<std::vector<std::int64_t>> enumerate_minimal_systems(
    std::size_t k, std::int64_t max_entry) {
  std::vector<std::vector<std::int64_t>> out;
  std::vector<std::int64_t> cur;
  auto rec = [&](auto&& self, std::int64_t start) -> void {
    if (cur.size() == k) {
      std::int64_t g = 0;
      for (auto v : cur) g = std::gcd(g, v);
      if (g == 1 && brute_minimal(cur) == cur) out.push_back(cur);
      return;
    }
    for (std::int64_t v = start; v <= max_entry; ++v) {
      cur.push_back(v);
      self(self, v + 1);
      cur.pop_back();
    }
  };
  rec(rec, 2);
  return out;
}

/// A numerical semigroup held by its Apery set with respect to m.
struct KunzSemigroup {
  std::int64_t m = 1;
  std::vector<std::int64_t> apery;  // apery[r] is the least element = r mod m

  bool contains(std::int64_t x) const {
    return x >= 0 && x >= apery[static_cast<std::size_t>(x % m)];
  }
  std::int64_t frobenius() const {
    return *std::max_element(apery.begin(), apery.end()) - m;
  }
  std::vector<std::int64_t> minimal_generators() const {
    std::vector<std::int64_t> out{m};
    for (std::int64_t r = 1; r < m; ++r) {
      bool decomposable = false;
      for (std::int64_t i = 1; i < m && !decomposable; ++i) {
        auto j = ((r - i) % m + m) % m;
        if (j == 0) continue;
        decomposable = apery[static_cast<std::size_t>(i)] +
                           apery[static_cast<std::size_t>(j)] ==
                       apery[static_cast<std::size_t>(r)];
      }
      if (!decomposable) out.push_back(apery[static_cast<std::size_t>(r)]);
    }
    std::sort(out.begin(), out.end());
    return out;
  }
};

/// Visits every numerical semigroup with multiplicity <= max_m and
/// Frobenius number <= max_f, by depth-first search over Kunz coordinates.
inline void for_each_semigroup(
    std::int64_t max_m, std::int64_t max_f,
    const std::function<void(const KunzSemigroup&)>& visit) {
  for (std::int64_t m = 1; m <= max_m; ++m) {
    KunzSemigroup s;
    s.m = m;
    s.apery.assign(static_cast<std::size_t>(m), 0);
    auto w = [&](std::int64_t r) { return s.apery[static_cast<std::size_t>(r)]; };
    auto rec = [&](auto&& self, std::int64_t r) -> void {
      if (r == m) {
        visit(s);
        return;
      }
      for (std::int64_t v = m + r; v - m <= max_f; v += m) {
        s.apery[static_cast<std::size_t>(r)] = v;
        bool ok = true;
        for (std::int64_t i = 1; i <= r && ok; ++i) {
          auto t = (i + r) % m;
          if (t != 0 && t <= r) ok = w(i) + v >= w(t);
          auto j = ((r - i) % m + m) % m;
          if (ok && j != 0 && j <= r) ok = w(i) + w(j) >= v;
        }
        if (ok) self(self, r + 1);
      }
    };
    rec(rec, 1);
  }
}

/// Delta' straight from the definition: gaps a with a + s in the semigroup
/// for every nonzero element s. Elements at or above the conductor are
/// harmless, so s runs below it.
inline std::vector<std::int64_t> brute_delta_prime(const KunzSemigroup& s) {
  const auto c = s.frobenius() + 1;
  std::vector<std::int64_t> out;
  for (std::int64_t a = 1; a < c; ++a) {
    if (s.contains(a)) continue;
    bool ok = true;
    for (std::int64_t x = 1; x < c && ok; ++x) {
      if (s.contains(x)) ok = s.contains(a + x);
    }
    if (ok) out.push_back(a);
  }
  return out;
}

/// Random polynomial with small integer coefficients.
inline Polynomial random_polynomial(std::mt19937_64& rng, std::size_t nvars,
                                    std::size_t max_terms,
                                    std::uint32_t max_exp) {
  std::uniform_int_distribution<std::size_t> nterms(1, max_terms);
  std::uniform_int_distribution<std::uint32_t> exp(0, max_exp);
  std::uniform_int_distribution<int> coef(-5, 5);
  std::vector<Term> terms;
  const auto count = nterms(rng);
  for (std::size_t k = 0; k < count; ++k) {
    Monomial m(nvars);
    for (std::size_t i = 0; i < nvars; ++i) m[i] = exp(rng);
    int c = coef(rng);
    if (c == 0) c = 1;
    terms.push_back(Term{Rational(c), m});
  }
  auto f = Polynomial::from_terms(nvars, std::move(terms));
  if (f.is_zero()) return random_polynomial(rng, nvars, max_terms, max_exp);
  return f;
}

inline Monomial random_monomial(std::mt19937_64& rng, std::size_t nvars,
                                std::uint32_t max_exp) {
  std::uniform_int_distribution<std::uint32_t> exp(0, max_exp);
  Monomial m(nvars);
  for (std::size_t i = 0; i < nvars; ++i) m[i] = exp(rng);
  return m;
}

/// Random minimal generating system with embedding dimension in
/// [min_dim, max_dim] and largest element <= max_entry.
inline std::vector<std::int64_t> random_curve_exponents(
    std::mt19937_64& rng, std::size_t max_dim, std::int64_t max_entry,
    std::size_t min_dim = 2) {
  std::uniform_int_distribution<std::size_t> dim(min_dim, max_dim);
  std::uniform_int_distribution<std::int64_t> entry(2, max_entry);
  while (true) {
    auto k = dim(rng);
    std::set<std::int64_t> s;
    while (s.size() < k) s.insert(entry(rng));
    std::vector<std::int64_t> v(s.begin(), s.end());
    std::int64_t g = 0;
    for (auto x : v) g = std::gcd(g, x);
    if (g != 1) continue;
    if (brute_minimal(v) != v) continue;
    return v;
  }
}

}  // namespace monocurve::testing
