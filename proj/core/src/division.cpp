#include "monocurve/division.hpp"

#include "monocurve/errors.hpp"

namespace monocurve {

namespace {

struct Lead {
  Monomial monomial;
  Rational coefficient;
};

std::vector<Lead> leads_of(std::span<const Polynomial> divisors,
                           const MonomialOrder& order) {
  std::vector<Lead> leads;
  leads.reserve(divisors.size());
  for (const auto& g : divisors) {
    if (g.is_zero()) throw ValidationError("division by the zero polynomial");
    const auto& lt = g.leading_term(order);
    leads.push_back(Lead{lt.monomial, lt.coefficient});
  }
  return leads;
}

template <typename OnQuotient>
Polynomial run_division(const Polynomial& dividend,
                        std::span<const Polynomial> divisors,
                        const MonomialOrder& order, OnQuotient on_quotient) {
  auto leads = leads_of(divisors, order);
  Polynomial p = dividend;
  Polynomial r(dividend.num_variables());
  while (!p.is_zero()) {
    Term lt = p.leading_term(order);
    bool reduced = false;
    for (std::size_t i = 0; i < divisors.size(); ++i) {
      if (!leads[i].monomial.divides(lt.monomial)) continue;
      Rational c = lt.coefficient / leads[i].coefficient;
      Monomial m = lt.monomial.quotient(leads[i].monomial);
      on_quotient(i, c, m);
      p.subtract_multiple(c, m, divisors[i]);
      reduced = true;
      break;
    }
    if (!reduced) {
      r.add_term(lt.coefficient, lt.monomial);
      p.add_term(-lt.coefficient, lt.monomial);
    }
  }
  return r;
}

}  // namespace

DivisionRecord divide(const Polynomial& dividend,
                      std::span<const Polynomial> divisors,
                      const MonomialOrder& order) {
  DivisionRecord record;
  record.quotients.assign(divisors.size(),
                          Polynomial(dividend.num_variables()));
  record.remainder = run_division(
      dividend, divisors, order,
      [&](std::size_t i, const Rational& c, const Monomial& m) {
        record.quotients[i].add_term(c, m);
      });
  return record;
}

Polynomial remainder(const Polynomial& dividend,
                     std::span<const Polynomial> divisors,
                     const MonomialOrder& order) {
  return run_division(dividend, divisors, order,
                      [](std::size_t, const Rational&, const Monomial&) {});
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g,
                        const MonomialOrder& order) {
  if (f.is_zero() || g.is_zero()) {
    throw ValidationError("S-polynomial of a zero polynomial");
  }
  const auto& lf = f.leading_term(order);
  const auto& lg = g.leading_term(order);
  Monomial l = lf.monomial.lcm(lg.monomial);
  Polynomial s = f.times_term(1 / lf.coefficient, l.quotient(lf.monomial));
  s.subtract_multiple(1 / lg.coefficient, l.quotient(lg.monomial), g);
  return s;
}

}  // namespace monocurve
