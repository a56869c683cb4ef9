#ifndef GDALG_SYNTAX_HPP
#define GDALG_SYNTAX_HPP

#include "gdalg/comder.hpp"
#include "gdalg/poisder.hpp"
#include "gdalg/term.hpp"

#include <string_view>

namespace gdalg {

/// Surface syntax. Whitespace is allowed between tokens.
///
///   term    := operand | operand "o" operand
///   operand := gen | "(" term ")" | "[" term "," term "]"
///   gen     := "x" digits
///
/// A bare "a o b" is accepted only where it is unambiguous: the whole input
/// or a bracket argument. "x1 o x2 o x3" is rejected; there is no precedence.
/// This covers everything to_string(Term) prints.
Term parse_term(std::string_view s);

///   comb    := summand (("+" | "-") summand)*      leading sign allowed
///   summand := [rational ["*"]] term
TermComb parse_term_comb(std::string_view s);

/// Poisson polynomials:
///
///   pois    := summand (("+" | "-") summand)*
///   summand := [rational ["*"]] factor ("*" factor)*
///   factor  := dgen | "{" pois "," pois "}" | "(" pois ")"
///   dgen    := gen ("'" | "''" | "'''" | "^(" digits ")")?
///
/// Products and brackets are evaluated, so the result is in the LS basis.
PoisPoly parse_pois(std::string_view s);

/// Same grammar without braces, evaluated in ComDer<X>.
CDPoly parse_cd(std::string_view s);

} // namespace gdalg

#endif
