#include "gdalg/identities.hpp"
#include "gdalg/sgd.hpp"
#include "gdalg/syntax.hpp"

#include <doctest.h>

using namespace gdalg;

TEST_CASE("identities 1-8 hold") {
    for (int id = 1; id <= 8; ++id) {
        CAPTURE(id);
        const IdentityReport r = check_identity(id);
        CHECK(r.id == id);
        CHECK(r.holds);
        CHECK(r.witness.empty());
        CHECK_FALSE(r.parts.empty());
        for (const auto& p : r.parts) CHECK(to_string(p.lhs) == to_string(p.rhs));
    }
}

TEST_CASE("identity sides are not trivially zero") {
    for (int id : {1, 2, 5, 6, 7, 8}) {
        CAPTURE(id);
        CHECK(to_string(check_identity(id).parts[0].lhs) != "0");
    }
}

TEST_CASE("Wronskian alternating sum") {
    const IdentityReport r = check_wronskian();
    CHECK(r.holds);
    CHECK(check_identity(kWronskianId).holds);
}

TEST_CASE("unknown identities are rejected") {
    CHECK_THROWS_AS(check_identity(0), std::invalid_argument);
    CHECK_THROWS_AS(derive_special(6), std::invalid_argument);
}

TEST_CASE("special identities are recovered by reduction") {
    const TermComb d7 = derive_special(7);
    CHECK(d7.size() == 3);
    CHECK(canonical_form(d7, true) == canonical_form(special_rhs(7), true));

    const TermComb d8 = derive_special(8);
    CHECK(canonical_form(d8, true) == canonical_form(special_rhs(8), true));
    // the collected term 2([x4, x3] o x1) o x2
    const TermComb c8 = canonical_form(d8, true);
    const SignedTerm two = canonical_form(parse_term("([x4, x3] o x1) o x2"), true);
    CHECK(c8.coeff(two.term) * two.sign == -2);
}

TEST_CASE("reductions have the original image") {
    CHECK([] {
        PoisPoly e;
        for (const auto& [t, q] : derive_special(8)) e.add(tau2(t), q);
        return e;
    }() == tau2(parse_term("[x4 o x1, x3 o x2]")));
}
