#ifndef GDALG_IDENTITIES_HPP
#define GDALG_IDENTITIES_HPP

#include "gdalg/comder.hpp"
#include "gdalg/poisder.hpp"
#include "gdalg/term.hpp"

#include <string>
#include <variant>
#include <vector>

namespace gdalg {

using Expansion = std::variant<CDPoly, PoisPoly>;

// One equation "lhs = rhs", both sides expanded.
struct IdentityPart {
    std::string statement;
    Expansion lhs;
    Expansion rhs;
};

struct IdentityReport {
    int id = 0;
    std::string name;
    std::vector<IdentityPart> parts;
    bool holds = false;
    // first monomial of the first nonzero difference, empty if the identity holds
    std::string witness;
};

/// Identities checked by expanding both sides on generators x1, x2, ...:
///   1 left symmetry and 2 right commutativity of a o b = a d(b) in ComDer<X>;
///   3-5 the Poisson axioms in PoisDer<X>;
///   6 the Gelfand-Dorfman identity and 7, 8 the special identities for
///     a o b = a d(b), [a, b] = {a, b} in PoisDer<X>.
IdentityReport check_identity(int id);

/// sum over S_4 of sign(s) [x_s1, [x_s2, [x_s3, [x_s4, x5]]]] with the
/// Wronskian bracket [a, b] = a d(b) - b d(a) in ComDer<X>.
IdentityReport check_wronskian();

inline constexpr int kWronskianId = 9;

/// Basis expansion of the non-basic left side of identity 7 or 8:
/// [x1, (x2 o x3) o x4] and [x4 o x1, x3 o x2] respectively.
TermComb derive_special(int id);

/// The same elements written as the right sides of identities 7 and 8
/// (identity 8 solved for [x4 o x1, x3 o x2]).
TermComb special_rhs(int id);

std::string to_string(const Expansion& e);

} // namespace gdalg

#endif
