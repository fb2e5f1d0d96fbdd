#include "monocurve/polynomial.hpp"

#include <algorithm>
#include <utility>

#include "monocurve/errors.hpp"

namespace monocurve {

namespace {

bool term_before(const Term& a, const Term& b) {
  return a.monomial > b.monomial;
}

Rational rational_pow(const Rational& base, std::uint64_t e) {
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), e);
  mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), e);
  Rational r(num, den);
  r.canonicalize();
  return r;
}

// Merge two canonical term lists: a + scale * b.
std::vector<Term> merge(const std::vector<Term>& a, const std::vector<Term>& b,
                        const Rational& scale, const Monomial* shift) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  auto scaled = [&](const Term& t) {
    return Term{t.coefficient * scale,
                shift ? t.monomial * *shift : t.monomial};
  };
  while (i < a.size() || j < b.size()) {
    if (j == b.size()) {
      out.push_back(a[i++]);
      continue;
    }
    Term tb = scaled(b[j]);
    if (i == a.size() || tb.monomial > a[i].monomial) {
      out.push_back(std::move(tb));
      ++j;
    } else if (a[i].monomial > tb.monomial) {
      out.push_back(a[i++]);
    } else {
      Rational c = a[i].coefficient + tb.coefficient;
      if (c != 0) out.push_back(Term{std::move(c), a[i].monomial});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

void Polynomial::check_ring(const Polynomial& other) const {
  if (num_variables_ != other.num_variables_) {
    throw ValidationError("polynomials live in different rings");
  }
}

Polynomial Polynomial::constant(std::size_t num_variables, const Rational& c) {
  Polynomial p(num_variables);
  if (c != 0) p.terms_.push_back(Term{c, Monomial(num_variables)});
  return p;
}

Polynomial Polynomial::from_monomial(const Monomial& m, const Rational& c) {
  Polynomial p(m.size());
  if (c != 0) p.terms_.push_back(Term{c, m});
  return p;
}

Polynomial Polynomial::from_terms(std::size_t num_variables,
                                  std::vector<Term> terms) {
  Polynomial p(num_variables);
  for (const auto& t : terms) {
    if (t.monomial.size() != num_variables) {
      throw ValidationError("term does not match the ring");
    }
  }
  std::sort(terms.begin(), terms.end(), term_before);
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().monomial == t.monomial) {
      p.terms_.back().coefficient += t.coefficient;
      if (p.terms_.back().coefficient == 0) p.terms_.pop_back();
    } else if (t.coefficient != 0) {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

Polynomial Polynomial::binomial(const Monomial& u, const Monomial& v) {
  return from_terms(u.size(), {Term{1, u}, Term{-1, v}});
}

bool Polynomial::is_constant() const {
  return terms_.size() == 1 && terms_.front().monomial.is_one();
}

bool Polynomial::is_pure_binomial() const {
  if (terms_.size() != 2) return false;
  const auto& c0 = terms_[0].coefficient;
  const auto& c1 = terms_[1].coefficient;
  return (c0 == 1 && c1 == -1) || (c0 == -1 && c1 == 1);
}

bool Polynomial::is_homogeneous(std::span<const std::int64_t> weights) const {
  if (terms_.empty()) return true;
  auto d = terms_.front().monomial.weighted_degree(weights);
  return std::all_of(terms_.begin(), terms_.end(), [&](const Term& t) {
    return t.monomial.weighted_degree(weights) == d;
  });
}

std::int64_t Polynomial::weighted_degree(
    std::span<const std::int64_t> weights) const {
  if (terms_.empty()) return 0;
  return terms_.front().monomial.weighted_degree(weights);
}

std::uint64_t Polynomial::total_degree() const {
  std::uint64_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.monomial.total_degree());
  return d;
}

const Term& Polynomial::leading_term(const MonomialOrder& order) const {
  if (terms_.empty()) {
    throw ValidationError("the zero polynomial has no leading term");
  }
  const Term* best = &terms_.front();
  for (const auto& t : terms_) {
    if (order.greater(t.monomial, best->monomial)) best = &t;
  }
  return *best;
}

Polynomial Polynomial::monic(const MonomialOrder& order) const {
  if (is_zero()) return *this;
  Rational lc = leading_coefficient(order);
  if (lc == 1) return *this;
  return scaled(1 / lc);
}

Polynomial Polynomial::operator-() const { return scaled(-1); }

Polynomial Polynomial::operator+(const Polynomial& other) const {
  Polynomial r(*this);
  r += other;
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& other) const {
  Polynomial r(*this);
  r -= other;
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  check_ring(other);
  terms_ = merge(terms_, other.terms_, 1, nullptr);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  check_ring(other);
  terms_ = merge(terms_, other.terms_, -1, nullptr);
  return *this;
}

Polynomial Polynomial::operator*(const Polynomial& other) const {
  check_ring(other);
  std::vector<Term> products;
  products.reserve(terms_.size() * other.terms_.size());
  for (const auto& a : terms_) {
    for (const auto& b : other.terms_) {
      products.push_back(
          Term{a.coefficient * b.coefficient, a.monomial * b.monomial});
    }
  }
  return from_terms(num_variables_, std::move(products));
}

Polynomial Polynomial::scaled(const Rational& c) const {
  Polynomial r(num_variables_);
  if (c == 0) return r;
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) {
    r.terms_.push_back(Term{t.coefficient * c, t.monomial});
  }
  return r;
}

Polynomial Polynomial::times_term(const Rational& c, const Monomial& m) const {
  Polynomial r(num_variables_);
  if (c == 0) return r;
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) {
    r.terms_.push_back(Term{t.coefficient * c, t.monomial * m});
  }
  return r;
}

void Polynomial::subtract_multiple(const Rational& c, const Monomial& m,
                                   const Polynomial& other) {
  check_ring(other);
  if (c == 0 || other.is_zero()) return;
  terms_ = merge(terms_, other.terms_, -c, &m);
}

void Polynomial::add_term(const Rational& c, const Monomial& m) {
  if (m.size() != num_variables_) {
    throw ValidationError("term does not match the ring");
  }
  if (c == 0) return;
  auto it = std::lower_bound(
      terms_.begin(), terms_.end(), m,
      [](const Term& t, const Monomial& key) { return t.monomial > key; });
  if (it != terms_.end() && it->monomial == m) {
    it->coefficient += c;
    if (it->coefficient == 0) terms_.erase(it);
  } else {
    terms_.insert(it, Term{c, m});
  }
}

Polynomial Polynomial::substitute(std::span<const Polynomial> images) const {
  if (images.size() != num_variables_) {
    throw ValidationError("substitution needs one image per variable");
  }
  std::size_t target = images.empty() ? 0 : images.front().num_variables();
  for (const auto& img : images) {
    if (img.num_variables() != target) {
      throw ValidationError("substitution images live in different rings");
    }
  }
  Polynomial result(target);
  for (const auto& t : terms_) {
    Polynomial product = constant(target, t.coefficient);
    for (std::size_t i = 0; i < num_variables_; ++i) {
      if (t.monomial[i] != 0) product = product * pow(images[i], t.monomial[i]);
    }
    result += product;
  }
  return result;
}

Rational Polynomial::evaluate(std::span<const Rational> point) const {
  if (point.size() != num_variables_) {
    throw ValidationError("evaluation point has the wrong dimension");
  }
  Rational sum = 0;
  for (const auto& t : terms_) {
    Rational v = t.coefficient;
    for (std::size_t i = 0; i < num_variables_; ++i) {
      if (t.monomial[i] != 0) v *= rational_pow(point[i], t.monomial[i]);
    }
    sum += v;
  }
  return sum;
}

Polynomial Polynomial::extended(std::size_t num_variables) const {
  if (num_variables < num_variables_) {
    throw ValidationError("cannot extend to a smaller ring");
  }
  Polynomial r(num_variables);
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) {
    Monomial m(num_variables);
    for (std::size_t i = 0; i < num_variables_; ++i) m[i] = t.monomial[i];
    r.terms_.push_back(Term{t.coefficient, m});
  }
  return r;
}

Polynomial Polynomial::truncated(std::size_t num_variables) const {
  for (std::size_t i = num_variables; i < num_variables_; ++i) {
    if (!is_free_of(i)) {
      throw ValidationError("cannot drop a variable that occurs");
    }
  }
  Polynomial r(num_variables);
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) {
    r.terms_.push_back(Term{t.coefficient, t.monomial.truncated(num_variables)});
  }
  return r;
}

bool Polynomial::is_free_of(std::size_t index) const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [&](const Term& t) { return t.monomial[index] == 0; });
}

Polynomial pow(const Polynomial& base, std::uint64_t exponent) {
  if (base.size() == 1) {
    const auto& t = base.terms().front();
    Monomial m(base.num_variables());
    for (std::size_t i = 0; i < m.size(); ++i) {
      auto e = static_cast<std::uint64_t>(t.monomial[i]) * exponent;
      if (e > 0x7fffffffULL) throw GuardViolation("monomial exponent overflow");
      m[i] = static_cast<Monomial::Exponent>(e);
    }
    return Polynomial::from_monomial(m, rational_pow(t.coefficient, exponent));
  }
  Polynomial result = Polynomial::constant(base.num_variables(), 1);
  Polynomial square = base;
  while (exponent > 0) {
    if (exponent & 1) result = result * square;
    exponent >>= 1;
    if (exponent) square = square * square;
  }
  return result;
}

}  // namespace monocurve
