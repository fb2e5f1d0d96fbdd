#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "monocurve/monomial_order.hpp"
#include "monocurve/polynomial.hpp"
#include "monocurve/semigroup.hpp"
#include "monocurve/toric_ideal.hpp"

namespace monocurve {

/// Bresinsky's curves in A^4: q2 even, q2 >= 4, q1 = q2 + 1, d1 = q2 - 1,
/// n = (q1 q2, q1 d1, q1 q2 + d1, q2 d1). Variable x_i carries weight n_i.
struct BresinskyInstance {
  std::int64_t q2 = 0;
  std::int64_t q1 = 0;
  std::int64_t d1 = 0;
  std::vector<std::int64_t> n;

  MonomialCurve curve() const { return MonomialCurve(n); }
};

/// Throws ValidationError unless q2 is even and >= 4.
BresinskyInstance bresinsky_sequence(std::int64_t q2);

/// The generating set made of
///   f_mu = x0^(mu-1) x2^(q2-mu) - x1^(q2-mu) x3^(mu+1),   1 <= mu <= q2
///   h_m  = x0^m x3^(q1-m) - x1^(q2-m) x2^m,              1 <= m <= q2-2
///   g1   = x0^d1 - x1^q2
///   g2   = x2 x3 - x1 x0
/// in that order; 2 q2 binomials.
std::vector<Polynomial> bresinsky_generators(const BresinskyInstance& inst);

/// Lex x2 > x1 > x0 > x3.
MonomialOrder bresinsky_order();

/// (2 q2, 4 (q2 - 1), 2 q2 - 3).
std::vector<std::size_t> bresinsky_expected_betti(std::int64_t q2);

struct BresinskyReport {
  bool generates = false;
  bool is_gb = false;
  bool betti_match = false;
  std::vector<std::size_t> betti;
};

BresinskyReport verify_bresinsky(const BresinskyInstance& inst);
/// Same checks against a caller-supplied generating set.
BresinskyReport verify_bresinsky(const BresinskyInstance& inst,
                                 const std::vector<Polynomial>& generators);

/// M = {a, a+d, ..., a+(p-2)d, b, b+d}.
struct ConcatenationInstance {
  std::int64_t a = 0;
  std::int64_t d = 0;
  std::int64_t b = 0;
  std::int64_t p = 0;
  std::vector<std::int64_t> generators;
};

/// Throws ValidationError unless p >= 3, a, d > 0, b > a + (p-2)d,
/// gcd(a, d) = 1, d does not divide b - a, and M is a minimal generating
/// system.
ConcatenationInstance concatenation_semigroup(std::int64_t a, std::int64_t d,
                                              std::int64_t b, std::int64_t p);

struct SweepRow {
  std::string family;
  std::vector<std::int64_t> params;
  std::vector<std::int64_t> generators;
  std::vector<std::size_t> betti;
  std::optional<std::int64_t> frobenius;
  std::optional<bool> symmetric;
  std::optional<bool> eta_ok;
  std::string error;
};

/// One row per q2, in input order; invalid values become error rows.
std::vector<SweepRow> bresinsky_sweep(const std::vector<std::int64_t>& q2s,
                                      std::size_t jobs = 1,
                                      std::size_t max_basis_size = 0);

struct ConcatenationParams {
  std::int64_t a, d, b, p;
};

std::vector<SweepRow> concatenation_sweep(
    const std::vector<ConcatenationParams>& grid, std::size_t jobs = 1,
    std::size_t max_basis_size = 0);

std::string sweep_to_json_lines(const std::vector<SweepRow>& rows);
std::string sweep_to_table(const std::vector<SweepRow>& rows);

}  // namespace monocurve
