#include "gdalg/errors.hpp"
#include "gdalg/lyndon.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>

using namespace gdalg;

namespace {

// a > b > c as letters
const DLetter a{3, 0}, b{2, 0}, c{1, 0};

LieTree L(DLetter l) { return LieTree::letter(l); }
LieTree B(LieTree l, LieTree r) { return LieTree::bracket(std::move(l), std::move(r)); }

// all bracketings of the given leaves in order
std::vector<LieTree> bracketings(const std::vector<DLetter>& w, std::size_t lo, std::size_t hi) {
    if (hi - lo == 1) return {L(w[lo])};
    std::vector<LieTree> out;
    for (std::size_t k = lo + 1; k < hi; ++k)
        for (const auto& l : bracketings(w, lo, k))
            for (const auto& r : bracketings(w, k, hi)) out.push_back(B(l, r));
    return out;
}

LieTree random_tree(std::mt19937& rng, int degree) {
    if (degree == 1) return L({1 + static_cast<int>(rng() % 3), static_cast<int>(rng() % 2)});
    const int k = 1 + static_cast<int>(rng() % (degree - 1));
    return B(random_tree(rng, k), random_tree(rng, degree - k));
}

} // namespace

TEST_CASE("word order") {
    CHECK(word_less({a, b}, {a}));
    CHECK(word_less({a}, {}));
    CHECK_FALSE(word_less({}, {a}));
    CHECK(word_less({{1, 1}, {2, 2}}, {{2, 2}, {1, 1}}));
    CHECK_FALSE(word_less({a}, {a}));
}

TEST_CASE("is_ls") {
    CHECK(is_ls({a, a, b, a, c}));
    CHECK(is_ls({c}));
    CHECK_FALSE(is_ls({{1, 1}, {2, 2}}));
    CHECK(is_ls({{2, 2}, {1, 1}}));
    CHECK_FALSE(is_ls({a, a}));
    CHECK_FALSE(is_ls({}));
}

TEST_CASE("standard bracketing") {
    CHECK(to_string(ls_bracket({a, b})) == "{x3, x2}");
    CHECK(to_string(ls_bracket({{2, 2}, {1, 1}})) == "{x2'', x1'}");
    const LSWord w = ls_bracket({a, a, b, a, c});
    // the longest proper LS suffix of abac is ac, not bac
    CHECK(to_string(w) == "{x3, {{x3, x2}, {x3, x1}}}");
    CHECK(satisfies_ls_conditions(w.tree()));
    CHECK_THROWS_AS(ls_bracket({b, a, a}), NotLSError);
}

TEST_CASE("non-standard bracketings fail the LS conditions") {
    // [[a, b], c] has the LS word abc but not the standard bracketing
    CHECK_FALSE(satisfies_ls_conditions(B(B(L(a), L(b)), L(c))));
    CHECK(satisfies_ls_conditions(B(L(a), B(L(b), L(c)))));
}

TEST_CASE("lie_expand") {
    CHECK(lie_expand(L(a)) == AssocPoly(AWord{a}));
    AssocPoly ba;
    ba.add({b, a}, 1);
    ba.add({a, b}, -1);
    CHECK(lie_expand(B(L(b), L(a))) == ba);
    AssocPoly e = lie_expand(B(B(L(b), L(a)), L(a)));
    CHECK(e.coeff({b, a, a}) == 1);
    CHECK(e.coeff({a, b, a}) == -2);
    CHECK(e.coeff({a, a, b}) == 1);
    CHECK(e.size() == 3);
}

TEST_CASE("lie_nf") {
    const DLetter x1{1, 0}, x2{2, 0}, x3{3, 0};
    LiePoly anti = lie_nf(B(L(x1), L(x2)));
    CHECK(anti.size() == 1);
    CHECK(anti.coeff(ls_bracket({x2, x1})) == -1);

    AssocPoly jacobi = lie_expand(B(B(L(x3), L(x2)), L(x1)));
    jacobi += lie_expand(B(B(L(x2), L(x1)), L(x3)));
    jacobi += lie_expand(B(B(L(x1), L(x3)), L(x2)));
    CHECK(lie_nf(jacobi).empty());

    AssocPoly not_lie;
    not_lie.add({x1, x2}, 1);
    CHECK_THROWS_AS(lie_nf(not_lie), NotLieElementError);
}

TEST_CASE("ls_less") {
    CHECK(ls_less(ls_bracket({{2, 1}, {1, 0}}), ls_bracket({{4, 2}, {3, 1}})));
    CHECK(ls_less(ls_bracket({{2, 0}, {1, 0}}), ls_bracket({{5, 0}})));
    CHECK(ls_less(ls_bracket({{5, 0}}), ls_bracket({{2, 1}, {1, 0}})));
    CHECK(ls_less(ls_bracket({{3, 0}, {1, 0}}), ls_bracket({{3, 0}, {2, 0}, {1, 0}})));
}

TEST_CASE("ls_enumerate matches the necklace formula") {
    CHECK(ls_enumerate(2, 0, 2).size() == 1);
    CHECK(ls_enumerate(2, 0, 3).size() == 2);
    CHECK(ls_enumerate(3, 0, 1).size() == 3);
    for (auto [g, r] : {std::pair{2, 0}, std::pair{3, 0}, std::pair{1, 1}, std::pair{1, 2}, std::pair{2, 1}})
        for (int n = 1; n <= 6; ++n) {
            CAPTURE(g);
            CAPTURE(r);
            CAPTURE(n);
            auto ws = ls_enumerate(g, r, n);
            CHECK(static_cast<std::int64_t>(ws.size()) == oracle::necklace(g * (r + 1), n));
            for (const auto& w : ws) CHECK(satisfies_ls_conditions(w.tree()));
        }
}

TEST_CASE("LS words are leading words of their expansions") {
    for (int n = 1; n <= 5; ++n)
        for (const auto& w : ls_enumerate(2, 1, n)) {
            const AssocPoly e = lie_expand(w.tree());
            auto top = std::max_element(e.begin(), e.end(), [](const auto& x, const auto& y) { return word_less(x.first, y.first); });
            CHECK(top->first == w.word());
            CHECK(top->second == 1);
            CHECK(lie_nf(w.tree()) == LiePoly(w));
        }
}

TEST_CASE("antisymmetry and Jacobi on random trees") {
    std::mt19937 rng(3);
    for (int trial = 0; trial < 60; ++trial) {
        const int d1 = 1 + static_cast<int>(rng() % 2), d2 = 1 + static_cast<int>(rng() % 2), d3 = 1 + static_cast<int>(rng() % 2);
        LieTree x = random_tree(rng, d1), y = random_tree(rng, d2), z = random_tree(rng, d3);
        AssocPoly anti = lie_expand(B(x, y)) + lie_expand(B(y, x));
        CHECK(lie_nf(anti).empty());
        AssocPoly jac = lie_expand(B(B(x, y), z)) + lie_expand(B(B(y, z), x)) + lie_expand(B(B(z, x), y));
        CHECK(lie_nf(jac).empty());
    }
}

TEST_CASE("multilinear free Lie dimensions are (n-1)!") {
    for (int n = 1; n <= 5; ++n) {
        std::vector<DLetter> w;
        for (int i = 1; i <= n; ++i) w.push_back({i, 0});
        std::vector<LiePoly> rows;
        do {
            for (const auto& t : bracketings(w, 0, w.size())) rows.push_back(lie_nf(t));
        } while (std::next_permutation(w.begin(), w.end()));
        CHECK(static_cast<std::int64_t>(lc_rank(rows)) == oracle::factorial(n - 1));
    }
}

TEST_CASE("derivation of LS words") {
    const LSWord w = ls_bracket({{2, 0}, {1, 0}});
    LiePoly expected = lie_nf(B(L({2, 1}), L({1, 0}))) + lie_nf(B(L({2, 0}), L({1, 1})));
    CHECK(ls_derive(w) == expected);
    CHECK(ls_bracket_nf(w, w).empty());
}
