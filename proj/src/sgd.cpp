#include "gdalg/sgd.hpp"

#include "gdalg/errors.hpp"
#include "gdalg/novikov.hpp"
#include "gdalg/triangular.hpp"

#include <algorithm>
#include <functional>
#include <span>
#include <map>
#include <mutex>
#include <numeric>

namespace gdalg {

PoisMonomial PoisNF::monomial() const {
    std::vector<LSWord> f;
    for (int i : plain) f.push_back(ls_bracket(AWord{DLetter{i, 0}}));
    f.insert(f.end(), b_words.begin(), b_words.end());
    f.insert(f.end(), a_words.begin(), a_words.end());
    for (const auto& l : derived) f.push_back(ls_bracket(AWord{l}));
    return PoisMonomial(std::move(f));
}

namespace {

bool plain_less(const LSWord& a, const LSWord& b) {
    if (a.degree() != b.degree()) return a.degree() > b.degree();
    return word_less(a.word(), b.word());
}

} // namespace

bool operator<(const PoisKey& a, const PoisKey& b) {
    if (a.orders != b.orders) return a.orders < b.orders;
    if (a.primed != b.primed) return a.primed < b.primed;
    if (a.plain != b.plain)
        return std::lexicographical_compare(a.plain.begin(), a.plain.end(), b.plain.begin(), b.plain.end(), plain_less);
    return a.high < b.high;
}

PoisNF pnf_classify(const PoisMonomial& m) {
    if (pois_weight(m) != -1)
        throw WeightError("monomial " + to_string(m) + " has weight " + std::to_string(pois_weight(m)) +
                          ", expected -1");
    PoisNF a;
    for (const auto& f : m.factors()) {
        if (f.degree() == 1) {
            const DLetter l = f.word().front();
            if (l.order == 0) {
                a.plain.push_back(l.gen);
            } else {
                a.derived.push_back(l);
            }
        } else if (f.involves_d()) {
            a.a_words.push_back(f);
        } else {
            a.b_words.push_back(f);
        }
    }
    // factors arrive ascending under ls_less
    std::sort(a.plain.begin(), a.plain.end());
    std::sort(a.derived.rbegin(), a.derived.rend());
    std::reverse(a.a_words.begin(), a.a_words.end());
    return a;
}

PoisKey pnf_key(const PoisNF& a) {
    PoisKey k;
    const PoisMonomial m = a.monomial();
    for (const auto& f : m.factors()) {
        const int o = f.order_sum();
        if (o >= 2) {
            k.orders.push_back(o);
            k.high.push_back(f);
        } else if (o == 1) {
            k.primed.push_back(f);
        } else {
            k.plain.push_back(f);
        }
    }
    std::sort(k.orders.rbegin(), k.orders.rend());
    std::sort(k.primed.begin(), k.primed.end());
    std::sort(k.plain.begin(), k.plain.end(), plain_less);
    std::sort(k.high.rbegin(), k.high.rend());
    return k;
}

bool pnf_less(const PoisNF& a, const PoisNF& b) { return pnf_key(a) < pnf_key(b); }

Term lie_word_term(const LSWord& w) {
    std::function<Term(const LieTree&)> build = [&](const LieTree& t) -> Term {
        if (t.is_letter()) {
            if (t.get_letter().order != 0) throw StructureError("lie_word_term: word involves d");
            return Term::gen(t.get_letter().gen);
        }
        return Term::bracket(build(t.left()), build(t.right()));
    };
    return build(w.tree());
}

namespace {

// phi-chain c_r o (... (c_1 o x_j)) over the given ascending block of items.
Term chain(std::span<const Term> block, const DLetter& l) {
    Term t = Term::gen(l.gen);
    for (const auto& c : block) t = Term::circ(c, t);
    return t;
}

} // namespace

Term psi(const PoisNF& a) {
    // weight -1 items, ascending: generators, then B words, then absorbed A words
    std::vector<Term> items;
    for (int i : a.plain) items.push_back(Term::gen(i));
    for (const auto& b : a.b_words) items.push_back(lie_word_term(b));

    for (const auto& A : a.a_words) {
        const int k = A.order_sum();
        if (static_cast<int>(items.size()) < k)
            throw StructureError("psi: " + to_string(A) + " needs " + std::to_string(k) + " items, " +
                                 std::to_string(items.size()) + " available");
        std::vector<Term> taken(items.end() - k, items.end());
        items.erase(items.end() - k, items.end());

        const AWord& w = A.word();
        std::vector<std::size_t> pos(w.size());
        std::iota(pos.begin(), pos.end(), 0);
        std::stable_sort(pos.begin(), pos.end(), [&](std::size_t x, std::size_t y) { return w[y] < w[x]; });

        std::vector<Term> leaf(w.size(), Term::gen(1));
        std::size_t top = taken.size();
        for (std::size_t p : pos) {
            const int r = w[p].order;
            leaf[p] = chain(std::span<const Term>(taken).subspan(top - r, r), w[p]);
            top -= r;
        }

        std::size_t next = 0;
        std::function<Term(const LieTree&)> build = [&](const LieTree& t) -> Term {
            if (t.is_letter()) return leaf[next++];
            Term l = build(t.left());
            return Term::bracket(l, build(t.right()));
        };
        items.push_back(build(A.tree()));
    }
    return phi_items(std::move(items), a.derived);
}

PoisPoly tau2(const Term& t) {
    static std::mutex mutex;
    static std::map<Term, PoisPoly> cache;
    if (t.is_leaf()) return pois_letter(t.gen_index());
    {
        std::lock_guard lock(mutex);
        if (auto it = cache.find(t); it != cache.end()) return it->second;
    }
    PoisPoly l = tau2(t.left()), r = tau2(t.right());
    PoisPoly v = t.kind() == Term::Kind::Circ ? sgd_circ(l, r) : sgd_bracket(l, r);
    std::lock_guard lock(mutex);
    return cache.emplace(t, std::move(v)).first->second;
}

SignedBasisTerm psi_hat(const PoisNF& a) {
    Term t = psi(a);
    Rational c = tau2(t).coeff(a.monomial());
    if (c == 1) return {1, t};
    if (c == -1) return {-1, t};
    throw SignError("leading coefficient " + to_string(c) + " for psi(" + to_string(a.monomial()) + ")");
}

namespace {

TriangularReducer<PoisMonomial, PoisKey>& sgd_reducer() {
    static TriangularReducer<PoisMonomial, PoisKey> r(
        [](const PoisMonomial& m) { return pnf_key(pnf_classify(m)); },
        [](const PoisMonomial& m) { return psi(pnf_classify(m)); },
        [](const Term& t) { return tau2(t); },
        [](const PoisMonomial& m) { return to_string(m); });
    return r;
}

} // namespace

TermComb sgd_reduce(const PoisPoly& p) {
    if (p.empty()) return {};
    if (pois_homogeneous_weight(p) != -1) throw WeightError("sgd_reduce: input must have weight -1");
    return sgd_reducer().reduce(p);
}

TermComb sgd_multiply(const Term& a, const Term& b, SgdOp op) {
    const PoisPoly ta = tau2(a), tb = tau2(b);
    return sgd_reduce(op == SgdOp::Circ ? sgd_circ(ta, tb) : sgd_bracket(ta, tb));
}

std::vector<Term> sgd_basis(int num_gens, int degree, bool multilinear) {
    std::vector<Term> out;
    for (const auto& m : pois_enumerate(num_gens, degree, -1, multilinear)) out.push_back(psi(pnf_classify(m)));
    return out;
}

} // namespace gdalg
