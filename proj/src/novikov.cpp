#include "gdalg/novikov.hpp"

#include "gdalg/errors.hpp"
#include "gdalg/triangular.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

namespace gdalg {

CDMonomial NovNF::monomial() const {
    std::vector<DLetter> ls;
    for (int i : plain) ls.push_back({i, 0});
    ls.insert(ls.end(), high.begin(), high.end());
    for (int k : primed) ls.push_back({k, 1});
    return CDMonomial(std::move(ls));
}

std::vector<DLetter> NovNF::derived() const {
    std::vector<DLetter> out = high;
    for (int k : primed) out.push_back({k, 1});
    return out;
}

NovNF nf_classify(const CDMonomial& m) {
    if (cd_weight(m) != -1)
        throw WeightError("monomial " + to_string(m) + " has weight " + std::to_string(cd_weight(m)) +
                          ", expected -1");
    NovNF a;
    // letters are stored ascending
    for (const auto& l : m.letters()) {
        if (l.order == 0) {
            a.plain.push_back(l.gen);
        } else if (l.order == 1) {
            a.primed.push_back(l.gen);
        } else {
            a.high.push_back(l);
        }
    }
    std::reverse(a.high.begin(), a.high.end());
    std::reverse(a.primed.begin(), a.primed.end());
    return a;
}

NovKey nf_key(const NovNF& a) {
    NovKey k;
    for (const auto& l : a.high) k.orders.push_back(l.order);
    k.primed = a.primed;
    k.plain = a.plain;
    return k;
}

bool nf_less(const NovNF& a, const NovNF& b) { return nf_key(a) < nf_key(b); }

Term phi_items(std::vector<Term> items, std::span<const DLetter> derived) {
    for (const auto& l : derived) {
        if (l.order < 1) throw StructureError("phi: derived letter of order 0");
        if (static_cast<int>(items.size()) < l.order)
            throw StructureError("phi: letter " + to_string(l) + " needs " + std::to_string(l.order) +
                                 " items, " + std::to_string(items.size()) + " available");
        auto first = items.end() - l.order;
        Term t = Term::gen(l.gen);
        for (auto it = first; it != items.end(); ++it) t = Term::circ(*it, t);
        items.erase(first, items.end());
        items.push_back(std::move(t));
    }
    if (items.size() != 1)
        throw StructureError("phi: " + std::to_string(items.size()) + " items left over");
    return items.front();
}

Term phi(const NovNF& a) {
    std::vector<Term> items;
    for (int i : a.plain) items.push_back(Term::gen(i));
    auto d = a.derived();
    return phi_items(std::move(items), d);
}

CDPoly tau_nov(const Term& t) {
    switch (t.kind()) {
    case Term::Kind::Leaf:
        return cd_letter(t.gen_index());
    case Term::Kind::Circ:
        return nov_circ(tau_nov(t.left()), tau_nov(t.right()));
    case Term::Kind::Bracket:
        break;
    }
    throw WeightError("bracket in a Novikov term: " + to_string(t));
}

namespace {

TriangularReducer<CDMonomial, NovKey>& nov_reducer() {
    static TriangularReducer<CDMonomial, NovKey> r(
        [](const CDMonomial& m) { return nf_key(nf_classify(m)); },
        [](const CDMonomial& m) { return phi(nf_classify(m)); },
        [](const Term& t) { return tau_nov(t); },
        [](const CDMonomial& m) { return to_string(m); });
    return r;
}

} // namespace

TermComb nov_reduce(const CDPoly& p) {
    if (p.empty()) return {};
    if (cd_homogeneous_weight(p) != -1) throw WeightError("nov_reduce: input must have weight -1");
    return nov_reducer().reduce(p);
}

TermComb nov_multiply(const Term& a, const Term& b) { return nov_reduce(nov_circ(tau_nov(a), tau_nov(b))); }

std::vector<Term> nov_basis(int num_gens, int degree, bool multilinear) {
    std::vector<Term> out;
    for (const auto& m : cd_enumerate(num_gens, degree, -1, multilinear)) out.push_back(phi(nf_classify(m)));
    return out;
}

bool young_filling_valid(const YoungFilling& f) {
    const auto& lam = f.shape;
    if (lam.empty() || lam.size() != f.rows.size()) return false;
    for (std::size_t s = 0; s < lam.size(); ++s) {
        if (lam[s] < 1 || static_cast<int>(f.rows[s].size()) != lam[s]) return false;
        if (s >= 1 && lam[s] > lam[s - 1]) return false;
    }
    if (lam.size() >= 2 && lam[0] <= lam[1]) return false;

    // i-entries, each row read from its rightmost i-entry leftwards, then the next row
    std::vector<int> seq;
    std::size_t multi = 0; // rows with at least two cells
    for (std::size_t s = 0; s < lam.size(); ++s) {
        if (lam[s] < 2) continue;
        ++multi;
        for (int c = lam[s] - 2; c >= 0; --c) seq.push_back(f.rows[s][c]);
    }
    if (!std::is_sorted(seq.rbegin(), seq.rend())) return false;

    auto t = [&](std::size_t s) { return f.rows[s].back(); };
    for (std::size_t s = multi; s + 1 < lam.size(); ++s)
        if (t(s) < t(s + 1)) return false;
    if (lam.size() >= 2 && lam[0] == lam[1] + 1 && t(0) < t(1)) return false;
    for (std::size_t s = 1; s + 1 < multi; ++s)
        if (lam[s] == lam[s + 1] && t(s) < t(s + 1)) return false;
    return true;
}

std::vector<YoungFilling> young_fillings(int num_gens, int degree, bool multilinear) {
    std::vector<std::vector<int>> shapes;
    std::vector<int> cur;
    std::function<void(int, int)> parts = [&](int left, int max_part) {
        if (left == 0) {
            if (cur.size() < 2 || cur[0] > cur[1]) shapes.push_back(cur);
            return;
        }
        for (int p = std::min(left, max_part); p >= 1; --p) {
            cur.push_back(p);
            parts(left - p, p);
            cur.pop_back();
        }
    };
    parts(degree, degree);

    std::vector<YoungFilling> out;
    std::vector<int> cells(degree);
    auto emit = [&](const std::vector<int>& shape) {
        YoungFilling f{shape, {}};
        std::size_t pos = 0;
        for (int len : shape) {
            f.rows.emplace_back(cells.begin() + pos, cells.begin() + pos + len);
            pos += len;
        }
        if (young_filling_valid(f)) out.push_back(std::move(f));
    };
    for (const auto& shape : shapes) {
        if (multilinear) {
            std::iota(cells.begin(), cells.end(), 1);
            do {
                emit(shape);
            } while (std::next_permutation(cells.begin(), cells.end()));
        } else {
            std::fill(cells.begin(), cells.end(), 1);
            while (true) {
                emit(shape);
                int i = degree - 1;
                while (i >= 0 && cells[i] == num_gens) cells[i--] = 1;
                if (i < 0) break;
                ++cells[i];
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

Term filling_to_term(const YoungFilling& f) {
    auto row_term = [](const std::vector<int>& row) {
        Term t = Term::gen(row.back());
        for (std::size_t c = 0; c + 1 < row.size(); ++c) t = Term::circ(Term::gen(row[c]), t);
        return t;
    };
    Term u = row_term(f.rows.front());
    for (std::size_t m = 1; m < f.rows.size(); ++m) u = Term::circ(u, row_term(f.rows[m]));
    return u;
}

} // namespace gdalg
