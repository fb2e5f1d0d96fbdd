#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "monocurve/monomial_order.hpp"
#include "monocurve/polynomial.hpp"

namespace monocurve {

using VariableNames = std::vector<std::string>;

/// x0, x1, ..., x{n-1}.
VariableNames default_variable_names(std::size_t n);

/// Text form of a polynomial.
///
/// Grammar (whitespace ignored):
///   poly    := ['-'] term (('+' | '-') term)*  |  '0'
///   term    := coeff | [coeff ['*']] factor ('*'? factor)*
///   coeff   := digits ['/' digits]
///   factor  := name ['^' digits]
/// Names come from the supplied variable list (x0..xN, t, h, ...).
/// Printing is canonical: terms descending under the given order (canonical
/// lex when none), unit coefficients omitted, factors joined by '*', terms
/// joined by " + " / " - ". parse(print(f)) == f for every f.
std::string to_string(const Polynomial& f, const VariableNames& names);
std::string to_string(const Polynomial& f, const VariableNames& names,
                      const MonomialOrder& order);
std::string to_string(const Monomial& m, const VariableNames& names);

Polynomial parse_polynomial(std::string_view text, const VariableNames& names);

}  // namespace monocurve
