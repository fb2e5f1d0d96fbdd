#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <utility>
#include <vector>

#include "monocurve/monomial_order.hpp"
#include "monocurve/polynomial.hpp"

namespace monocurve {

/// How S(g_i, g_j) reduces to zero against a basis:
///
///   S(g_i, g_j) = left * g_i - right * g_j = sum_k quotients[k] * g_k
///
/// with left = lcm / Lt(g_i), right = lcm / Lt(g_j) and every
/// Lm(quotients[k] * g_k) <= Lm(S). Pairs with coprime leading monomials are
/// flagged; for monic f, g their quotients come from the identity
///   S(f, g) = -(g - Lm(g)) * f + (f - Lm(f)) * g
/// rather than from running the division.
struct SPairTranscript {
  std::size_t i = 0;
  std::size_t j = 0;
  Polynomial left;
  Polynomial right;
  std::vector<Polynomial> quotients;
  bool coprime_criterion = false;
};

using TranscriptMap =
    std::map<std::pair<std::size_t, std::size_t>, SPairTranscript>;

class GroebnerBasis {
 public:
  GroebnerBasis(std::vector<Polynomial> generators, MonomialOrder order,
                TranscriptMap transcripts = {});

  const std::vector<Polynomial>& generators() const { return generators_; }
  const MonomialOrder& order() const { return order_; }
  std::size_t size() const { return generators_.size(); }
  std::size_t num_variables() const { return num_variables_; }

  const TranscriptMap& transcripts() const { return transcripts_; }
  /// True iff every pair i < j has a transcript.
  bool has_all_transcripts() const;
  /// Throws ValidationError when the pair has none.
  const SPairTranscript& transcript(std::size_t i, std::size_t j) const;

 private:
  std::size_t num_variables_;
  std::vector<Polynomial> generators_;
  MonomialOrder order_;
  TranscriptMap transcripts_;
};

struct BuchbergerOptions {
  /// Skip pairs whose leading monomials are coprime.
  bool product_criterion = true;
  /// Keep a transcript for every pair of the final basis.
  bool record_transcripts = false;
  /// 0 means unbounded; otherwise GuardViolation once exceeded.
  std::size_t max_basis_size = 0;
};

/// Buchberger completion with the normal selection strategy: the pair with
/// the smallest lcm degree goes first, ties by pair index. Generators are
/// made monic on insertion; zero inputs are dropped.
GroebnerBasis buchberger(std::span<const Polynomial> generators,
                         const MonomialOrder& order,
                         const BuchbergerOptions& options = {});

struct GroebnerCheck {
  bool is_groebner = false;
  /// Transcripts for every pair that reduced to zero.
  TranscriptMap transcripts;
  /// Pairs whose S-polynomial left a nonzero remainder.
  std::vector<std::pair<std::size_t, std::size_t>> failing_pairs;
};

/// Buchberger's criterion: every S-pair must reduce to zero.
GroebnerCheck check_groebner_basis(std::span<const Polynomial> generators,
                                   const MonomialOrder& order);
bool is_groebner_basis(std::span<const Polynomial> generators,
                       const MonomialOrder& order);

/// Recompute the full transcript map for a basis (coprime pairs
/// synthesized). Throws InternalError if some pair fails to reduce.
GroebnerBasis with_transcripts(const GroebnerBasis& gb);

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& gb);
bool ideal_contains(const GroebnerBasis& gb, const Polynomial& f);

/// Monic, interreduced basis sorted by leading monomial (descending). Unique
/// for a given ideal and order. Transcripts are not carried over.
GroebnerBasis reduce_basis(const GroebnerBasis& gb);

struct HomogenizedBasis {
  std::vector<Polynomial> generators;
  /// MonomialOrder::homogenized() of the input order.
  MonomialOrder order;
};

/// Homogenize each generator with a new last variable to its total degree.
/// Requires a degree-compatible order (ValidationError otherwise); the result
/// is then a Groebner basis of the homogenized ideal.
HomogenizedBasis homogenize_basis(const GroebnerBasis& gb);

Polynomial homogenize(const Polynomial& f);

}  // namespace monocurve
