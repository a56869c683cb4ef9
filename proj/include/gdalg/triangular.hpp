#ifndef GDALG_TRIANGULAR_HPP
#define GDALG_TRIANGULAR_HPP

#include "gdalg/errors.hpp"
#include "gdalg/lincomb.hpp"
#include "gdalg/term.hpp"

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <string>

namespace gdalg {

/// Expresses elements of a graded monomial space in a basis of terms whose
/// expansions are unitriangular: every basis term t(a) expands to
/// a + (monomials with smaller key).
///
/// reduce() repeatedly takes the key-greatest monomial a of the remainder,
/// records coeff * t(a) and subtracts coeff * expand(t(a)). Expansions of
/// basis terms are cached; the cache is guarded by a mutex so a shared
/// reducer behaves as a pure function.
template <class Mono, class Key>
class TriangularReducer {
  public:
    struct Lead {
        Term term;
        int sign = 1;               // basis element is sign * term
        LinComb<Mono> expansion;    // sign * expand(term); leading monomial has coefficient 1
    };

    using KeyFn = std::function<Key(const Mono&)>;
    using BasisFn = std::function<Term(const Mono&)>;
    using ExpandFn = std::function<LinComb<Mono>(const Term&)>;
    using NameFn = std::function<std::string(const Mono&)>;

    TriangularReducer(KeyFn key, BasisFn basis, ExpandFn expand, NameFn name)
        : key_(std::move(key)), basis_(std::move(basis)), expand_(std::move(expand)), name_(std::move(name)) {}

    /// Basis element for the normal-form monomial a, with its expansion.
    /// Throws SignError if the coefficient of a is not +-1 and InvariantError
    /// if some other monomial of the expansion is not below a.
    std::shared_ptr<const Lead> lead(const Mono& a) {
        {
            std::lock_guard lock(mutex_);
            if (auto it = cache_.find(a); it != cache_.end()) return it->second;
        }
        auto made = std::make_shared<Lead>(Lead{basis_(a), 1, {}});
        made->expansion = expand_(made->term);
        Rational c = made->expansion.coeff(a);
        if (c == -1) {
            made->sign = -1;
            made->expansion *= Rational(-1);
        } else if (c != 1) {
            throw SignError("leading coefficient " + to_string(c) + " for " + name_(a));
        }
        const Key ka = key_(a);
        for (const auto& [m, q] : made->expansion) {
            if (m == a) continue;
            if (!(key_(m) < ka))
                throw InvariantError("expansion of the basis element for " + name_(a) +
                                     " contains the non-smaller monomial " + name_(m));
        }
        std::lock_guard lock(mutex_);
        return cache_.emplace(a, std::move(made)).first->second;
    }

    TermComb reduce(LinComb<Mono> p) {
        TermComb out;
        while (!p.empty()) {
            auto top = p.begin();
            Key top_key = key_(top->first);
            for (auto it = std::next(p.begin()); it != p.end(); ++it) {
                Key k = key_(it->first);
                if (top_key < k) {
                    top = it;
                    top_key = std::move(k);
                }
            }
            const Mono a = top->first;
            const Rational c = top->second;
            auto l = lead(a);
            out.add(l->term, c * l->sign);
            p.add(l->expansion, -c);
            if (p.coeff(a) != 0) throw InvariantError("reduction did not remove " + name_(a));
        }
        return out;
    }

    const Key key(const Mono& m) const { return key_(m); }

  private:
    KeyFn key_;
    BasisFn basis_;
    ExpandFn expand_;
    NameFn name_;
    std::mutex mutex_;
    std::map<Mono, std::shared_ptr<const Lead>> cache_;
};

} // namespace gdalg

#endif
