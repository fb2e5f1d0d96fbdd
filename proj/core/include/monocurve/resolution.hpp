#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "monocurve/groebner.hpp"
#include "monocurve/poly_io.hpp"
#include "monocurve/polynomial.hpp"
#include "monocurve/toric_ideal.hpp"

namespace monocurve {

/// Dense matrix of polynomials.
class PolyMatrix {
 public:
  PolyMatrix(std::size_t rows, std::size_t cols, std::size_t num_variables);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t num_variables() const { return num_variables_; }

  Polynomial& operator()(std::size_t r, std::size_t c) {
    return entries_[r * cols_ + c];
  }
  const Polynomial& operator()(std::size_t r, std::size_t c) const {
    return entries_[r * cols_ + c];
  }

  bool is_zero() const;
  PolyMatrix operator*(const PolyMatrix& other) const;

  void erase_row(std::size_t r);
  void erase_column(std::size_t c);

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::size_t num_variables_;
  std::vector<Polynomial> entries_;
};

struct FreeModuleElement {
  std::vector<Polynomial> coordinates;
  /// Weighted degree of each basis vector of the ambient free module.
  std::vector<std::int64_t> degree_shifts;
};

/// First syzygies of a Groebner basis from its S-pair transcripts: for each
/// pair i < j the vector h - left * e_i + right * e_j. Each vector is
/// checked to annihilate the generators. Throws ValidationError when a
/// transcript is missing. Shifts use the supplied weights.
std::vector<FreeModuleElement> schreyer_syzygies(
    const GroebnerBasis& gb, std::span<const std::int64_t> weights);

/// Free resolution 0 <- R <- F_1 <- F_2 <- ... of R / I.
///
/// differentials[k - 1] is the map F_k -> F_{k-1}: rank(F_{k-1}) rows by
/// rank(F_k) columns, column c holding the image of the c-th basis vector.
/// shifts[k][c] is the weighted degree of that basis vector (shifts[0] is
/// {0}).
struct GradedResolution {
  std::size_t num_variables = 0;
  std::vector<std::int64_t> weights;
  std::vector<std::vector<std::int64_t>> shifts;
  std::vector<PolyMatrix> differentials;
  bool minimal = false;

  /// rank(F_0) = 1, rank(F_1), ...
  std::vector<std::size_t> ranks() const;
  std::size_t length() const { return differentials.size(); }
  /// ranks() without the leading 1.
  std::vector<std::size_t> betti() const;
};

/// Schreyer resolution of R / ideal(gb). The input need not carry
/// transcripts. Every level is a Groebner basis for the induced order and
/// the frame is sorted so the construction stops within num_variables
/// steps.
GradedResolution free_resolution(const GroebnerBasis& gb,
                                 std::span<const std::int64_t> weights);
GradedResolution free_resolution(const GradedIdealPresentation& pres);

/// Split off trivial summands by cancelling constant entries until none
/// remain. The ranks of the result are the graded Betti numbers.
GradedResolution minimalize(GradedResolution res);

/// d_k * d_{k+1} == 0 for every k.
bool is_complex(const GradedResolution& res);
/// No nonzero constant appears in any differential.
bool has_no_constant_entries(const GradedResolution& res);
/// Entry (r, c) of d_k is zero or homogeneous of degree
/// shifts[k][c] - shifts[k-1][r].
bool is_graded(const GradedResolution& res);

/// [beta_1, ..., beta_p] for the defining ideal of the curve.
std::vector<std::size_t> betti_numbers(const MonomialCurve& curve,
                                       std::size_t max_basis_size = 0);
/// Same, starting from a Groebner basis under the given order.
std::vector<std::size_t> betti_numbers(const MonomialCurve& curve,
                                       const MonomialOrder& order,
                                       std::size_t max_basis_size = 0);

/// Stable, diffable exports: ranks, shifts and differentials as polynomial
/// strings.
std::string resolution_to_json(const GradedResolution& res,
                               const VariableNames& names);
std::string resolution_to_text(const GradedResolution& res,
                               const VariableNames& names);

}  // namespace monocurve
