#include "monocurve/poly_io.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "monocurve/errors.hpp"

namespace monocurve {

VariableNames default_variable_names(std::size_t n) {
  VariableNames names;
  names.reserve(n);
  for (std::size_t i = 0; i < n; ++i) names.push_back("x" + std::to_string(i));
  return names;
}

std::string to_string(const Monomial& m, const VariableNames& names) {
  if (names.size() < m.size()) {
    throw ValidationError("not enough variable names to print monomial");
  }
  std::string out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += names[i];
    if (m[i] != 1) out += "^" + std::to_string(m[i]);
  }
  return out.empty() ? "1" : out;
}

namespace {

std::string print_terms(const std::vector<const Term*>& terms,
                        const VariableNames& names) {
  if (terms.empty()) return "0";
  std::string out;
  bool first = true;
  for (const Term* t : terms) {
    bool negative = t->coefficient < 0;
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    Rational magnitude = abs(t->coefficient);
    bool unit_monomial = t->monomial.is_one();
    if (magnitude != 1 || unit_monomial) {
      out += magnitude.get_str();
      if (!unit_monomial) out += '*';
    }
    if (!unit_monomial) out += to_string(t->monomial, names);
  }
  return out;
}

class Parser {
 public:
  Parser(std::string_view text, const VariableNames& names)
      : text_(text), names_(names) {}

  Polynomial parse() {
    Polynomial result(names_.size());
    skip_ws();
    if (at_end()) fail("empty polynomial");
    Rational sign = 1;
    if (peek() == '-' || peek() == '+') {
      if (peek() == '-') sign = -1;
      ++pos_;
    }
    while (true) {
      auto [c, m] = parse_term();
      result.add_term(sign * c, m);
      skip_ws();
      if (at_end()) break;
      char op = peek();
      if (op != '+' && op != '-') fail("expected '+' or '-'");
      sign = op == '-' ? -1 : 1;
      ++pos_;
    }
    return result;
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) {
      ++pos_;
    }
  }
  [[noreturn]] void fail(const std::string& why) const {
    throw ValidationError("cannot parse polynomial '" + std::string(text_) +
                          "' at position " + std::to_string(pos_) + ": " +
                          why);
  }

  std::string digits() {
    skip_ws();
    auto start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      ++pos_;
    }
    if (start == pos_) fail("expected digits");
    return std::string(text_.substr(start, pos_ - start));
  }

  // Longest variable name matching at the cursor, or npos.
  std::size_t match_name() const {
    std::size_t best = names_.size();
    std::size_t best_len = 0;
    for (std::size_t i = 0; i < names_.size(); ++i) {
      const auto& n = names_[i];
      if (n.size() > best_len && text_.substr(pos_, n.size()) == n) {
        best = i;
        best_len = n.size();
      }
    }
    if (best == names_.size()) return std::string_view::npos;
    // Reject partial identifiers such as "x12" when only x1 exists.
    auto end = pos_ + best_len;
    if (end < text_.size() &&
        std::isdigit(static_cast<unsigned char>(text_[end]))) {
      return std::string_view::npos;
    }
    return best;
  }

  std::pair<Rational, Monomial> parse_term() {
    skip_ws();
    Rational coefficient = 1;
    bool have_coefficient = false;
    if (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      mpz_class num(digits());
      mpz_class den = 1;
      skip_ws();
      if (!at_end() && peek() == '/') {
        ++pos_;
        den = mpz_class(digits());
        if (den == 0) fail("zero denominator");
      }
      coefficient = Rational(num, den);
      coefficient.canonicalize();
      have_coefficient = true;
      skip_ws();
      if (!at_end() && peek() == '*') {
        ++pos_;
        skip_ws();
        if (at_end() || match_name() == std::string_view::npos) {
          fail("expected a variable after '*'");
        }
      }
    }
    Monomial m(names_.size());
    bool have_factor = false;
    while (true) {
      skip_ws();
      if (at_end()) break;
      auto save = pos_;
      if (have_factor && peek() == '*') {
        ++pos_;
        skip_ws();
      }
      if (at_end()) fail("dangling '*'");
      auto index = match_name();
      if (index == std::string_view::npos) {
        if (pos_ != save) fail("unknown variable");
        if (std::isalpha(static_cast<unsigned char>(peek()))) {
          fail("unknown variable");
        }
        break;
      }
      pos_ += names_[index].size();
      Monomial::Exponent e = 1;
      skip_ws();
      if (!at_end() && peek() == '^') {
        ++pos_;
        auto d = digits();
        if (d.size() > 9) fail("exponent too large");
        e = static_cast<Monomial::Exponent>(std::stoul(d));
      }
      m[index] += e;
      have_factor = true;
    }
    if (!have_coefficient && !have_factor) fail("expected a term");
    return {coefficient, m};
  }

  std::string_view text_;
  const VariableNames& names_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string to_string(const Polynomial& f, const VariableNames& names) {
  std::vector<const Term*> terms;
  for (const auto& t : f.terms()) terms.push_back(&t);
  return print_terms(terms, names);
}

std::string to_string(const Polynomial& f, const VariableNames& names,
                      const MonomialOrder& order) {
  std::vector<const Term*> terms;
  for (const auto& t : f.terms()) terms.push_back(&t);
  std::stable_sort(terms.begin(), terms.end(), [&](const Term* a, const Term* b) {
    return order.greater(a->monomial, b->monomial);
  });
  return print_terms(terms, names);
}

Polynomial parse_polynomial(std::string_view text, const VariableNames& names) {
  if (names.size() > kMaxVariables) {
    throw ValidationError("too many variables");
  }
  std::string_view trimmed = text;
  while (!trimmed.empty() && std::isspace(static_cast<unsigned char>(trimmed.front()))) {
    trimmed.remove_prefix(1);
  }
  while (!trimmed.empty() && std::isspace(static_cast<unsigned char>(trimmed.back()))) {
    trimmed.remove_suffix(1);
  }
  if (trimmed == "0") return Polynomial(names.size());
  return Parser(text, names).parse();
}

}  // namespace monocurve
