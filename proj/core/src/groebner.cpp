#include "monocurve/groebner.hpp"

#include <algorithm>
#include <set>
#include <string>
#include <tuple>

#include "monocurve/division.hpp"
#include "monocurve/errors.hpp"

namespace monocurve {

GroebnerBasis::GroebnerBasis(std::vector<Polynomial> generators,
                             MonomialOrder order, TranscriptMap transcripts)
    : num_variables_(order.size()),
      generators_(std::move(generators)),
      order_(std::move(order)),
      transcripts_(std::move(transcripts)) {
  for (const auto& g : generators_) {
    if (g.num_variables() != num_variables_) {
      throw ValidationError("basis element does not match the order's ring");
    }
  }
}

bool GroebnerBasis::has_all_transcripts() const {
  const auto t = generators_.size();
  if (t < 2) return true;
  for (std::size_t j = 1; j < t; ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      if (!transcripts_.contains({i, j})) return false;
    }
  }
  return true;
}

const SPairTranscript& GroebnerBasis::transcript(std::size_t i,
                                                 std::size_t j) const {
  auto it = transcripts_.find({i, j});
  if (it == transcripts_.end()) {
    throw ValidationError("missing S-pair transcript for pair (" +
                          std::to_string(i) + ", " + std::to_string(j) + ")");
  }
  return it->second;
}

namespace {

// Transcript for a pair with coprime leading monomials, without dividing.
SPairTranscript coprime_transcript(const std::vector<Polynomial>& gens,
                                   std::size_t i, std::size_t j,
                                   const MonomialOrder& order) {
  const auto& f = gens[i];
  const auto& g = gens[j];
  const auto n = f.num_variables();
  const auto& ltf = f.leading_term(order);
  const auto& ltg = g.leading_term(order);
  SPairTranscript tr;
  tr.i = i;
  tr.j = j;
  tr.coprime_criterion = true;
  tr.left = Polynomial::from_monomial(ltg.monomial, 1 / ltf.coefficient);
  tr.right = Polynomial::from_monomial(ltf.monomial, 1 / ltg.coefficient);
  tr.quotients.assign(gens.size(), Polynomial(n));
  const Rational denom = ltf.coefficient * ltg.coefficient;
  Polynomial g_tail = g;
  g_tail.add_term(-ltg.coefficient, ltg.monomial);
  Polynomial f_tail = f;
  f_tail.add_term(-ltf.coefficient, ltf.monomial);
  tr.quotients[i] = g_tail.scaled(-1 / denom);
  tr.quotients[j] = f_tail.scaled(1 / denom);
  return tr;
}

SPairTranscript spair_multipliers(const std::vector<Polynomial>& gens,
                                  std::size_t i, std::size_t j,
                                  const MonomialOrder& order) {
  const auto& ltf = gens[i].leading_term(order);
  const auto& ltg = gens[j].leading_term(order);
  Monomial l = ltf.monomial.lcm(ltg.monomial);
  SPairTranscript tr;
  tr.i = i;
  tr.j = j;
  tr.left = Polynomial::from_monomial(l.quotient(ltf.monomial),
                                      1 / ltf.coefficient);
  tr.right = Polynomial::from_monomial(l.quotient(ltg.monomial),
                                       1 / ltg.coefficient);
  return tr;
}

struct PairKey {
  std::int64_t degree;
  std::size_t i;
  std::size_t j;
  friend auto operator<=>(const PairKey&, const PairKey&) = default;
};

}  // namespace

GroebnerBasis buchberger(std::span<const Polynomial> generators,
                         const MonomialOrder& order,
                         const BuchbergerOptions& options) {
  std::vector<Polynomial> basis;
  std::vector<Monomial> leads;
  for (const auto& g : generators) {
    if (g.num_variables() != order.size()) {
      throw ValidationError("generator does not match the order's ring");
    }
    if (g.is_zero()) continue;
    basis.push_back(g.monic(order));
    leads.push_back(basis.back().leading_monomial(order));
  }

  std::set<PairKey> queue;
  auto enqueue = [&](std::size_t i, std::size_t j) {
    queue.insert({order.degree(leads[i].lcm(leads[j])), i, j});
  };
  for (std::size_t j = 0; j < basis.size(); ++j) {
    for (std::size_t i = 0; i < j; ++i) enqueue(i, j);
  }

  TranscriptMap transcripts;
  std::vector<std::pair<std::size_t, std::size_t>> skipped;
  while (!queue.empty()) {
    auto [degree, i, j] = *queue.begin();
    queue.erase(queue.begin());
    if (options.product_criterion && leads[i].coprime(leads[j])) {
      if (options.record_transcripts) skipped.emplace_back(i, j);
      continue;
    }
    Polynomial s = s_polynomial(basis[i], basis[j], order);
    if (!options.record_transcripts) {
      Polynomial r = remainder(s, basis, order);
      if (r.is_zero()) continue;
      basis.push_back(r.monic(order));
    } else {
      DivisionRecord rec = divide(s, basis, order);
      SPairTranscript tr = spair_multipliers(basis, i, j, order);
      tr.quotients = std::move(rec.quotients);
      if (!rec.remainder.is_zero()) {
        // S = sum q_k g_k + lc * g_new.
        Rational lc = rec.remainder.leading_coefficient(order);
        tr.quotients.push_back(Polynomial::constant(order.size(), lc));
        basis.push_back(rec.remainder.monic(order));
      }
      transcripts.emplace(std::make_pair(i, j), std::move(tr));
      if (rec.remainder.is_zero()) continue;
    }
    leads.push_back(basis.back().leading_monomial(order));
    if (options.max_basis_size && basis.size() > options.max_basis_size) {
      throw GuardViolation("Groebner basis grew past " +
                           std::to_string(options.max_basis_size) +
                           " elements");
    }
    const auto k = basis.size() - 1;
    for (std::size_t a = 0; a < k; ++a) enqueue(a, k);
  }

  if (options.record_transcripts) {
    for (auto [i, j] : skipped) {
      transcripts.emplace(std::make_pair(i, j),
                          coprime_transcript(basis, i, j, order));
    }
    for (auto& [key, tr] : transcripts) {
      tr.quotients.resize(basis.size(), Polynomial(order.size()));
    }
  }
  return GroebnerBasis(std::move(basis), order, std::move(transcripts));
}

GroebnerCheck check_groebner_basis(std::span<const Polynomial> generators,
                                   const MonomialOrder& order) {
  std::vector<Polynomial> gens(generators.begin(), generators.end());
  for (const auto& g : gens) {
    if (g.is_zero()) throw ValidationError("zero polynomial in a basis");
    if (g.num_variables() != order.size()) {
      throw ValidationError("generator does not match the order's ring");
    }
  }
  GroebnerCheck check;
  for (std::size_t j = 0; j < gens.size(); ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      const auto& li = gens[i].leading_monomial(order);
      const auto& lj = gens[j].leading_monomial(order);
      if (li.coprime(lj)) {
        check.transcripts.emplace(std::make_pair(i, j),
                                  coprime_transcript(gens, i, j, order));
        continue;
      }
      DivisionRecord rec =
          divide(s_polynomial(gens[i], gens[j], order), gens, order);
      if (!rec.remainder.is_zero()) {
        check.failing_pairs.emplace_back(i, j);
        continue;
      }
      SPairTranscript tr = spair_multipliers(gens, i, j, order);
      tr.quotients = std::move(rec.quotients);
      check.transcripts.emplace(std::make_pair(i, j), std::move(tr));
    }
  }
  check.is_groebner = check.failing_pairs.empty();
  return check;
}

bool is_groebner_basis(std::span<const Polynomial> generators,
                       const MonomialOrder& order) {
  return check_groebner_basis(generators, order).is_groebner;
}

GroebnerBasis with_transcripts(const GroebnerBasis& gb) {
  auto check = check_groebner_basis(gb.generators(), gb.order());
  if (!check.is_groebner) {
    throw InternalError("basis fails Buchberger's criterion");
  }
  return GroebnerBasis(gb.generators(), gb.order(),
                       std::move(check.transcripts));
}

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& gb) {
  return remainder(f, gb.generators(), gb.order());
}

bool ideal_contains(const GroebnerBasis& gb, const Polynomial& f) {
  return normal_form(f, gb).is_zero();
}

GroebnerBasis reduce_basis(const GroebnerBasis& gb) {
  const auto& order = gb.order();
  std::vector<Polynomial> monic;
  for (const auto& g : gb.generators()) {
    if (!g.is_zero()) monic.push_back(g.monic(order));
  }
  std::vector<Monomial> leads;
  for (const auto& g : monic) leads.push_back(g.leading_monomial(order));

  std::vector<Polynomial> minimal;
  for (std::size_t i = 0; i < monic.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < monic.size() && !redundant; ++j) {
      if (j == i || !leads[j].divides(leads[i])) continue;
      redundant = leads[j] != leads[i] || j < i;
    }
    if (!redundant) minimal.push_back(monic[i]);
  }

  std::vector<Polynomial> reduced;
  reduced.reserve(minimal.size());
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Polynomial> others;
    for (std::size_t j = 0; j < minimal.size(); ++j) {
      if (j != i) others.push_back(minimal[j]);
    }
    reduced.push_back(remainder(minimal[i], others, order).monic(order));
  }
  std::sort(reduced.begin(), reduced.end(),
            [&](const Polynomial& a, const Polynomial& b) {
              return order.greater(a.leading_monomial(order),
                                   b.leading_monomial(order));
            });
  return GroebnerBasis(std::move(reduced), order);
}

Polynomial homogenize(const Polynomial& f) {
  const auto n = f.num_variables();
  const auto d = f.total_degree();
  std::vector<Term> terms;
  terms.reserve(f.size());
  for (const auto& t : f.terms()) {
    terms.push_back(Term{
        t.coefficient,
        t.monomial.extended(
            static_cast<Monomial::Exponent>(d - t.monomial.total_degree()))});
  }
  return Polynomial::from_terms(n + 1, std::move(terms));
}

HomogenizedBasis homogenize_basis(const GroebnerBasis& gb) {
  if (!gb.order().is_degree_compatible()) {
    throw ValidationError(
        "homogenize_basis needs a degree-compatible monomial order, got " +
        gb.order().describe());
  }
  HomogenizedBasis out{{}, gb.order().homogenized()};
  for (const auto& g : gb.generators()) out.generators.push_back(homogenize(g));
  return out;
}

}  // namespace monocurve
