#ifndef GDALG_TESTS_ORACLES_HPP
#define GDALG_TESTS_ORACLES_HPP

// Independent reference counts. Nothing here calls into the library.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <set>
#include <utility>
#include <vector>

namespace oracle {

using Letter = std::pair<int, int>;  // (generator, derivative order)

inline std::int64_t binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    std::int64_t r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

inline std::int64_t factorial(int n) { return n <= 1 ? 1 : n * factorial(n - 1); }

// number of partitions of n
inline std::int64_t partitions(int n) {
    std::vector<std::int64_t> p(n + 1, 0);
    p[0] = 1;
    for (int part = 1; part <= n; ++part)
        for (int m = part; m <= n; ++m) p[m] += p[m - part];
    return p[n];
}

inline int mobius(int n) {
    int result = 1;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        n /= p;
        if (n % p == 0) return 0;
        result = -result;
    }
    return n > 1 ? -result : result;
}

// Lyndon words of length n over k letters: (1/n) sum_{d | n} mu(d) k^(n/d)
inline std::int64_t necklace(int k, int n) {
    std::int64_t s = 0;
    for (int d = 1; d <= n; ++d) {
        if (n % d) continue;
        std::int64_t pw = 1;
        for (int i = 0; i < n / d; ++i) pw *= k;
        s += mobius(d) * pw;
    }
    return s / n;
}

// Every letter sequence of length n over generators 1..g whose orders sum to
// n - 1, collected as sorted multisets: the weight -1 monomials of ComDer.
inline std::size_t comder_weight_minus_one(int g, int n, bool multilinear) {
    std::set<std::vector<Letter>> seen;
    std::vector<Letter> cur;
    std::function<void(int)> rec = [&](int budget) {
        if (static_cast<int>(cur.size()) == n) {
            if (budget != 0) return;
            if (multilinear) {
                std::vector<int> gens;
                for (auto& l : cur) gens.push_back(l.first);
                std::sort(gens.begin(), gens.end());
                for (int i = 0; i < n; ++i)
                    if (gens[i] != i + 1) return;
            }
            auto s = cur;
            std::sort(s.begin(), s.end());
            seen.insert(s);
            return;
        }
        const int gens = multilinear ? n : g;
        for (int i = 1; i <= gens; ++i)
            for (int r = 0; r <= budget; ++r) {
                cur.push_back({i, r});
                rec(budget - r);
                cur.pop_back();
            }
    };
    rec(n - 1);
    return seen.size();
}

// Classical Lyndon words (strictly smaller than every proper rotation, plain
// lexicographic order), all lengths up to n. The number of such words with a
// given content does not depend on the order of the alphabet, so counting
// monomials built from them is independent of any ordering convention.
inline std::vector<std::vector<Letter>> lyndon_words(int gens, int n, int budget, bool distinct) {
    std::vector<std::vector<Letter>> out;
    std::vector<Letter> w;
    std::function<void(int)> rec = [&](int left) {
        if (!w.empty()) {
            bool lyndon = true;
            for (std::size_t k = 1; k < w.size() && lyndon; ++k) {
                std::vector<Letter> rot(w.begin() + k, w.end());
                rot.insert(rot.end(), w.begin(), w.begin() + k);
                if (!(w < rot)) lyndon = false;
            }
            if (lyndon) out.push_back(w);
        }
        if (static_cast<int>(w.size()) == n) return;
        for (int i = 1; i <= gens; ++i) {
            if (distinct && std::any_of(w.begin(), w.end(), [&](const Letter& l) { return l.first == i; })) continue;
            for (int r = 0; r <= left; ++r) {
                w.push_back({i, r});
                rec(left - r);
                w.pop_back();
            }
        }
    };
    rec(budget);
    return out;
}

// Weight -1 monomials of the free Poisson algebra on X_inf with n generator
// occurrences: multisets of Lyndon words, each weighing (order sum - 1).
inline std::size_t poisson_weight_minus_one(int g, int n, bool multilinear) {
    const int gens = multilinear ? n : g;
    const auto words = lyndon_words(gens, n, n - 1, multilinear);
    std::size_t count = 0;
    std::vector<int> used(gens + 1, 0);
    std::function<void(std::size_t, int, int)> rec = [&](std::size_t from, int len, int weight) {
        if (len == n) {
            if (weight == -1) ++count;
            return;
        }
        for (std::size_t i = from; i < words.size(); ++i) {
            const auto& w = words[i];
            if (len + static_cast<int>(w.size()) > n) continue;
            int orders = 0;
            bool clash = false;
            for (auto& l : w) {
                orders += l.second;
                if (multilinear && used[l.first]) clash = true;
            }
            if (clash) continue;
            for (auto& l : w) ++used[l.first];
            rec(multilinear ? i + 1 : i, len + static_cast<int>(w.size()), weight + orders - 1);
            for (auto& l : w) --used[l.first];
        }
    };
    rec(0, 0, 0);
    return count;
}

} // namespace oracle

#endif
