#include "gdalg/comder.hpp"

#include "gdalg/errors.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <string>

namespace gdalg {

CDMonomial::CDMonomial(std::vector<DLetter> letters) : letters_(std::move(letters)) {
    std::sort(letters_.begin(), letters_.end());
}

CDPoly cd_letter(int gen, int order) { return CDPoly(CDMonomial{DLetter{gen, order}}); }

CDMonomial cd_monomial_mul(const CDMonomial& a, const CDMonomial& b) {
    std::vector<DLetter> merged;
    merged.reserve(a.degree() + b.degree());
    std::merge(a.letters().begin(), a.letters().end(), b.letters().begin(), b.letters().end(),
               std::back_inserter(merged));
    return CDMonomial(std::move(merged));
}

CDPoly cd_mul(const CDPoly& p, const CDPoly& q) { return bilinear(p, q, cd_monomial_mul); }

CDPoly cd_derive(const CDPoly& p) {
    CDPoly out;
    for (const auto& [m, c] : p) {
        const auto& ls = m.letters();
        for (std::size_t i = 0; i < ls.size(); ++i) {
            // equal neighbours produce the same monomial; collected by add()
            auto next = ls;
            ++next[i].order;
            out.add(CDMonomial(std::move(next)), c);
        }
    }
    return out;
}

int cd_weight(const CDMonomial& m) {
    int w = 0;
    for (const auto& l : m.letters()) w += l.order - 1;
    return w;
}

int cd_homogeneous_weight(const CDPoly& p) {
    if (p.empty()) throw WeightError("zero polynomial has no weight");
    int w = cd_weight(p.begin()->first);
    for (const auto& [m, c] : p)
        if (cd_weight(m) != w) throw WeightError("polynomial is not weight-homogeneous");
    return w;
}

CDPoly nov_circ(const CDPoly& p, const CDPoly& q) { return cd_mul(p, cd_derive(q)); }

std::vector<CDMonomial> cd_enumerate(int num_gens, int degree, int weight, bool multilinear) {
    std::vector<CDMonomial> out;
    const int order_sum = weight + degree;
    if (degree < 1 || order_sum < 0) return out;

    if (multilinear) {
        // orders o_1..o_degree for x_1..x_degree with sum order_sum
        std::vector<DLetter> letters(degree);
        std::function<void(int, int)> rec = [&](int pos, int left) {
            if (pos == degree - 1) {
                letters[pos] = {pos + 1, left};
                out.emplace_back(letters);
                return;
            }
            for (int o = 0; o <= left; ++o) {
                letters[pos] = {pos + 1, o};
                rec(pos + 1, left - o);
            }
        };
        rec(0, order_sum);
    } else {
        // nondecreasing sequences of letters (as multisets) with the order budget
        std::vector<DLetter> letters;
        std::function<void(DLetter, int)> rec = [&](DLetter min, int left) {
            if (static_cast<int>(letters.size()) == degree) {
                if (left == 0) out.emplace_back(letters);
                return;
            }
            for (int o = min.order; o <= left; ++o) {
                for (int g = (o == min.order ? min.gen : 1); g <= num_gens; ++g) {
                    letters.push_back({g, o});
                    rec({g, o}, left - o);
                    letters.pop_back();
                }
            }
        };
        rec({1, 0}, order_sum);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::string to_string(const DLetter& l) {
    std::string s = "x" + std::to_string(l.gen);
    if (l.order <= 3) {
        s.append(static_cast<std::size_t>(l.order), '\'');
    } else {
        s += "^(" + std::to_string(l.order) + ")";
    }
    return s;
}

std::string to_string(const CDMonomial& m) {
    std::string s;
    for (const auto& l : m.letters()) {
        if (!s.empty()) s += '*';
        s += to_string(l);
    }
    return s;
}

std::string to_string(const CDPoly& p) {
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
