#include "gdalg/poisder.hpp"

#include "gdalg/errors.hpp"
#include "gdalg/novikov.hpp"

#include <algorithm>
#include <functional>

namespace gdalg {

PoisMonomial::PoisMonomial(std::vector<LSWord> factors) : factors_(std::move(factors)) {
    std::sort(factors_.begin(), factors_.end());
}

int PoisMonomial::degree() const noexcept {
    int d = 0;
    for (const auto& f : factors_) d += f.degree();
    return d;
}

PoisPoly pois_letter(int gen, int order) {
    return PoisPoly(PoisMonomial({ls_bracket(AWord{DLetter{gen, order}})}));
}

PoisPoly pois_from_lie(const LiePoly& p) {
    PoisPoly out;
    for (const auto& [w, c] : p) out.add(PoisMonomial({w}), c);
    return out;
}

PoisMonomial pois_monomial_mul(const PoisMonomial& a, const PoisMonomial& b) {
    std::vector<LSWord> f = a.factors();
    f.insert(f.end(), b.factors().begin(), b.factors().end());
    return PoisMonomial(std::move(f));
}

PoisPoly pois_mul(const PoisPoly& p, const PoisPoly& q) { return bilinear(p, q, pois_monomial_mul); }

namespace {

std::vector<LSWord> without(const std::vector<LSWord>& v, std::size_t i) {
    std::vector<LSWord> out;
    out.reserve(v.size() - 1);
    for (std::size_t k = 0; k < v.size(); ++k)
        if (k != i) out.push_back(v[k]);
    return out;
}

} // namespace

PoisPoly pois_bracket(const PoisPoly& p, const PoisPoly& q) {
    PoisPoly out;
    for (const auto& [a, ca] : p) {
        for (const auto& [b, cb] : q) {
            const auto& fa = a.factors();
            const auto& fb = b.factors();
            for (std::size_t i = 0; i < fa.size(); ++i) {
                for (std::size_t j = 0; j < fb.size(); ++j) {
                    const LiePoly& br = ls_bracket_nf(fa[i], fb[j]);
                    if (br.empty()) continue;
                    std::vector<LSWord> rest = without(fa, i);
                    auto rb = without(fb, j);
                    rest.insert(rest.end(), rb.begin(), rb.end());
                    for (const auto& [w, c] : br) {
                        auto f = rest;
                        f.push_back(w);
                        out.add(PoisMonomial(std::move(f)), ca * cb * c);
                    }
                }
            }
        }
    }
    return out;
}

PoisPoly pois_derive(const PoisPoly& p) {
    PoisPoly out;
    for (const auto& [m, c] : p) {
        const auto& f = m.factors();
        for (std::size_t i = 0; i < f.size(); ++i) {
            const auto rest = without(f, i);
            for (const auto& [w, cw] : ls_derive(f[i])) {
                auto g = rest;
                g.push_back(w);
                out.add(PoisMonomial(std::move(g)), c * cw);
            }
        }
    }
    return out;
}

int pois_weight(const PoisMonomial& m) {
    int w = 0;
    for (const auto& f : m.factors()) w += f.order_sum() - 1;
    return w;
}

int pois_homogeneous_weight(const PoisPoly& p) {
    if (p.empty()) throw WeightError("zero polynomial has no weight");
    int w = pois_weight(p.begin()->first);
    for (const auto& [m, c] : p)
        if (pois_weight(m) != w) throw WeightError("polynomial is not weight-homogeneous");
    return w;
}

namespace {

void require_weight_minus_one(const PoisPoly& p, const char* op) {
    if (!p.empty() && pois_homogeneous_weight(p) != -1)
        throw WeightError(std::string(op) + ": arguments must have weight -1");
}

} // namespace

PoisPoly sgd_circ(const PoisPoly& p, const PoisPoly& q) {
    require_weight_minus_one(p, "circ");
    require_weight_minus_one(q, "circ");
    return pois_mul(p, pois_derive(q));
}

PoisPoly sgd_bracket(const PoisPoly& p, const PoisPoly& q) {
    require_weight_minus_one(p, "bracket");
    require_weight_minus_one(q, "bracket");
    return pois_bracket(p, q);
}

namespace {

// LS words of length 1..max_len whose order sum is at most budget.
std::vector<LSWord> bounded_ls_words(int num_gens, int max_len, int budget, bool distinct_gens) {
    std::vector<LSWord> out;
    AWord w;
    std::vector<bool> used(num_gens + 1, false);
    std::function<void(int)> rec = [&](int left) {
        if (!w.empty() && is_ls(w)) out.push_back(ls_bracket(w));
        if (static_cast<int>(w.size()) == max_len) return;
        for (int g = 1; g <= num_gens; ++g) {
            if (distinct_gens && used[g]) continue;
            used[g] = true;
            for (int r = 0; r <= left; ++r) {
                w.push_back({g, r});
                rec(left - r);
                w.pop_back();
            }
            used[g] = false;
        }
    };
    rec(budget);
    std::sort(out.begin(), out.end());
    return out;
}

unsigned gen_mask(const LSWord& w) {
    unsigned m = 0;
    for (const auto& l : w.word()) m |= 1u << l.gen;
    return m;
}

} // namespace

std::vector<PoisMonomial> pois_enumerate(int num_gens, int degree, int weight, bool multilinear) {
    std::vector<PoisMonomial> out;
    if (degree < 1) return out;
    const int gens = multilinear ? degree : num_gens;
    // at most `degree` factors, each of weight (order sum - 1)
    const int budget = weight + degree;
    if (budget < 0) return out;
    const auto cand = bounded_ls_words(gens, degree, budget, multilinear);
    const unsigned full = ((1u << (degree + 1)) - 1) & ~1u;

    std::vector<LSWord> chosen;
    std::function<void(std::size_t, int, int, unsigned)> rec = [&](std::size_t from, int deg_left, int w, unsigned mask) {
        if (deg_left == 0) {
            if (w == weight && (!multilinear || mask == full)) out.emplace_back(chosen);
            return;
        }
        if (w - deg_left > weight) return;
        for (std::size_t i = from; i < cand.size(); ++i) {
            const LSWord& c = cand[i];
            if (c.degree() > deg_left) continue;
            unsigned m = 0;
            if (multilinear) {
                m = gen_mask(c);
                if (m & mask) continue;
            }
            chosen.push_back(c);
            rec(multilinear ? i + 1 : i, deg_left - c.degree(), w + c.order_sum() - 1, mask | m);
            chosen.pop_back();
        }
    };
    rec(0, degree, 0, 0);
    std::sort(out.begin(), out.end());
    return out;
}

std::string to_string(const PoisMonomial& m) {
    std::string s;
    for (const auto& f : m.factors()) {
        if (!s.empty()) s += '*';
        s += to_string(f);
    }
    return s;
}

std::string to_string(const PoisPoly& p) {
    if (p.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : p) {
        Rational mag = abs(c);
        if (first) {
            if (c < 0) out += '-';
        } else {
            out += c < 0 ? " - " : " + ";
        }
        first = false;
        if (mag != 1) out += to_string(mag) + "*";
        out += to_string(m);
    }
    return out;
}

} // namespace gdalg
