#include "gdalg/identities.hpp"

#include "gdalg/errors.hpp"
#include "gdalg/novikov.hpp"
#include "gdalg/sgd.hpp"
#include "gdalg/syntax.hpp"

#include <algorithm>
#include <array>
#include <numeric>

namespace gdalg {

namespace {

CDPoly expand_nov(const TermComb& c) {
    CDPoly out;
    for (const auto& [t, q] : c) out.add(tau_nov(t), q);
    return out;
}

PoisPoly expand_sgd(const TermComb& c) {
    PoisPoly out;
    for (const auto& [t, q] : c) out.add(tau2(t), q);
    return out;
}

IdentityPart nov_part(const char* lhs, const char* rhs) {
    return {std::string(lhs) + " = " + rhs, expand_nov(parse_term_comb(lhs)), expand_nov(parse_term_comb(rhs))};
}

IdentityPart sgd_part(const char* lhs, const char* rhs) {
    return {std::string(lhs) + " = " + rhs, expand_sgd(parse_term_comb(lhs)), expand_sgd(parse_term_comb(rhs))};
}

IdentityPart pois_part(std::string statement, PoisPoly lhs, PoisPoly rhs) {
    return {std::move(statement), std::move(lhs), std::move(rhs)};
}

IdentityReport finish(int id, std::string name, std::vector<IdentityPart> parts) {
    IdentityReport r{id, std::move(name), std::move(parts), true, {}};
    for (const auto& p : r.parts) {
        std::visit(
            [&](const auto& lhs) {
                using P = std::decay_t<decltype(lhs)>;
                P diff = lhs - std::get<P>(p.rhs);
                if (!diff.empty() && r.holds) {
                    r.holds = false;
                    r.witness = to_string(P(diff.begin()->first));
                }
            },
            p.lhs);
    }
    return r;
}

PoisPoly x(int i) { return pois_letter(i); }

} // namespace

IdentityReport check_identity(int id) {
    switch (id) {
    case 1:
        return finish(1, "left symmetry",
                      {nov_part("(x1 o x2) o x3 - x1 o (x2 o x3)", "(x2 o x1) o x3 - x2 o (x1 o x3)")});
    case 2:
        return finish(2, "right commutativity", {nov_part("(x1 o x2) o x3", "(x1 o x3) o x2")});
    case 3:
        return finish(3, "commutative associative product",
                      {pois_part("x1 x2 = x2 x1", pois_mul(x(1), x(2)), pois_mul(x(2), x(1))),
                       pois_part("(x1 x2) x3 = x1 (x2 x3)", pois_mul(pois_mul(x(1), x(2)), x(3)),
                                 pois_mul(x(1), pois_mul(x(2), x(3))))});
    case 4: {
        PoisPoly jacobi = pois_bracket(pois_bracket(x(1), x(2)), x(3)) +
                          pois_bracket(pois_bracket(x(2), x(3)), x(1)) +
                          pois_bracket(pois_bracket(x(3), x(1)), x(2));
        return finish(4, "Lie bracket",
                      {pois_part("{x1, x2} = -{x2, x1}", pois_bracket(x(1), x(2)), -pois_bracket(x(2), x(1))),
                       pois_part("{{x1, x2}, x3} + {{x2, x3}, x1} + {{x3, x1}, x2} = 0", jacobi, {})});
    }
    case 5:
        return finish(5, "Leibniz rule",
                      {pois_part("{x1, x2 x3} = {x1, x2} x3 + x2 {x1, x3}", pois_bracket(x(1), pois_mul(x(2), x(3))),
                                 pois_mul(pois_bracket(x(1), x(2)), x(3)) +
                                     pois_mul(x(2), pois_bracket(x(1), x(3))))});
    case 6:
        return finish(6, "Gelfand-Dorfman identity",
                      {sgd_part("x2 o [x1, x3]",
                                "[x1, x2 o x3] - [x3, x2 o x1] + [x2, x1] o x3 - [x2, x3] o x1")});
    case 7:
        return finish(7, "special identity of degree 4",
                      {sgd_part("[x1, (x2 o x3) o x4]",
                                "[x1, x2 o x3] o x4 + [x1, x2 o x4] o x3 - ([x1, x2] o x3) o x4")});
    case 8:
        return finish(8, "special identity of degree 4",
                      {sgd_part("[x3 o x1, x4 o x2]",
                                "[x4 o x1, x3 o x2] + [x3, x4 o x1] o x2 - [x4, x3 o x2] o x1"
                                " - [x4, x3 o x1] o x2 + [x3, x4 o x2] o x1 + 2([x4, x3] o x1) o x2")});
    case kWronskianId:
        return check_wronskian();
    default:
        throw std::invalid_argument("identity id must be 1..8 or " + std::to_string(kWronskianId));
    }
}

IdentityReport check_wronskian() {
    auto br = [](const CDPoly& a, const CDPoly& b) { return cd_mul(a, cd_derive(b)) - cd_mul(b, cd_derive(a)); };
    std::array<int, 4> p{1, 2, 3, 4};
    CDPoly sum;
    do {
        int inversions = 0;
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j)
                if (p[i] > p[j]) ++inversions;
        CDPoly t = br(cd_letter(p[3]), cd_letter(5));
        for (int i = 2; i >= 0; --i) t = br(cd_letter(p[i]), t);
        sum.add(t, inversions % 2 ? -1 : 1);
    } while (std::next_permutation(p.begin(), p.end()));
    return finish(kWronskianId, "Wronskian bracket, degree 5",
                  {{"sum over S4 of sign(s) [x_s1, [x_s2, [x_s3, [x_s4, x5]]]] = 0", sum, CDPoly{}}});
}

TermComb derive_special(int id) {
    if (id == 7) return sgd_reduce(tau2(parse_term("[x1, (x2 o x3) o x4]")));
    if (id == 8) return sgd_reduce(tau2(parse_term("[x4 o x1, x3 o x2]")));
    throw std::invalid_argument("derive_special: id must be 7 or 8");
}

TermComb special_rhs(int id) {
    if (id == 7) return parse_term_comb("[x1, x2 o x3] o x4 + [x1, x2 o x4] o x3 - ([x1, x2] o x3) o x4");
    if (id == 8)
        return parse_term_comb("[x3 o x1, x4 o x2] - [x3, x4 o x1] o x2 + [x4, x3 o x2] o x1"
                               " + [x4, x3 o x1] o x2 - [x3, x4 o x2] o x1 - 2([x4, x3] o x1) o x2");
    throw std::invalid_argument("special_rhs: id must be 7 or 8");
}

std::string to_string(const Expansion& e) {
    return std::visit([](const auto& p) { return to_string(p); }, e);
}

} // namespace gdalg
