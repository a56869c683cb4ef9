#include "gdalg/errors.hpp"
#include "gdalg/lincomb.hpp"
#include "gdalg/rational.hpp"

#include <doctest.h>

#include <random>
#include <string>

using namespace gdalg;

namespace {

Rational q(long n, long d) {
    Rational r(n, d);
    r.canonicalize();
    return r;
}

} // namespace

TEST_CASE("rationals stay reduced") {
    CHECK(to_string(q(2, 4)) == "1/2");
    CHECK(to_string(Rational(1, 3) + Rational(1, 6)) == "1/2");
    CHECK(to_string(q(6, 3) * Rational(1)) == "2");
    CHECK(to_string(Rational(-3, 4)) == "-3/4");
    CHECK(to_string(Rational(0)) == "0");
}

TEST_CASE("parse_rational") {
    CHECK(parse_rational("7") == 7);
    CHECK(parse_rational("-2/6") == Rational(-1, 3));
    CHECK(to_string(parse_rational("10/4")) == "5/2");
    CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("abc"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
}

TEST_CASE("linear combinations drop zero coefficients") {
    LinComb<std::string> p;
    p.add("a", 2);
    p.add("b", Rational(1, 2));
    p.add("a", -2);
    CHECK(p.size() == 1);
    CHECK(p.coeff("a") == 0);
    CHECK(p.coeff("b") == Rational(1, 2));

    LinComb<std::string> q("b", Rational(-1, 2));
    CHECK((p + q).empty());
    CHECK((p - q).coeff("b") == 1);
    CHECK((Rational(0) * p).empty());
    CHECK(-(-p) == p);
}

TEST_CASE("vector space laws on random combinations") {
    std::mt19937 rng(7);
    auto random_comb = [&] {
        LinComb<int> c;
        for (int i = 0; i < 6; ++i) c.add(static_cast<int>(rng() % 5), q(static_cast<long>(rng() % 7) - 3, 1 + static_cast<long>(rng() % 4)));
        return c;
    };
    for (int trial = 0; trial < 100; ++trial) {
        auto a = random_comb(), b = random_comb(), c = random_comb();
        const Rational s = q(static_cast<long>(rng() % 9) - 4, 1 + static_cast<long>(rng() % 5));
        CHECK(a + b == b + a);
        CHECK((a + b) + c == a + (b + c));
        CHECK(s * (a + b) == s * a + s * b);
        CHECK((a - a).empty());
        CHECK(lc_add(a, b) == a + b);
        CHECK(lc_scale(s, a) == s * a);
    }
}

TEST_CASE("bilinear and linear_map") {
    LinComb<int> a, b;
    a.add(1, 2);
    a.add(2, 1);
    b.add(10, 3);
    auto prod = bilinear(a, b, [](int x, int y) { return x + y; });
    CHECK(prod.coeff(11) == 6);
    CHECK(prod.coeff(12) == 3);
    auto doubled = linear_map<int>(a, [](int x) { return 2 * x; });
    CHECK(doubled.coeff(2) == 2);
    CHECK(doubled.coeff(4) == 1);
}

TEST_CASE("exact rank") {
    std::vector<LinComb<int>> v(3);
    v[0].add(1, 1);
    v[0].add(2, 1);
    v[1].add(2, 1);
    v[1].add(3, 1);
    v[2].add(1, 1);
    v[2].add(3, -1);
    CHECK(lc_rank(v) == 2);  // v2 = v0 - v1
    v[2].add(3, 2);
    CHECK(lc_rank(v) == 3);
    v.push_back({});
    CHECK(lc_rank(v) == 3);
    CHECK(lc_rank(std::vector<LinComb<int>>{}) == 0);
}

TEST_CASE("rank of a Hilbert-like matrix is full") {
    std::vector<LinComb<int>> rows(6);
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) rows[i].add(j, Rational(1, i + j + 1));
    CHECK(lc_rank(rows) == 6);
}

TEST_CASE("syntax errors carry a caret diagnostic") {
    SyntaxError e("x1 o", 4, {"generator", "'('"});
    CHECK(e.offset() == 4);
    CHECK(e.caret_diagnostic() == "x1 o\n    ^");
    CHECK(std::string(e.what()) == "syntax error at offset 4: expected generator or '('");
}
