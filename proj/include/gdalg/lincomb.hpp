#ifndef GDALG_LINCOMB_HPP
#define GDALG_LINCOMB_HPP

#include "gdalg/rational.hpp"

#include <cstddef>
#include <functional>
#include <map>
#include <span>
#include <utility>
#include <vector>

namespace gdalg {

/// Finite formal sum of monomials with nonzero rational coefficients.
///
/// Terms are kept in a std::map keyed by the monomial, so iteration order is
/// the monomial's operator< and printing is reproducible. A zero coefficient
/// is never stored.
template <class K>
class LinComb {
  public:
    using map_type = std::map<K, Rational>;
    using const_iterator = typename map_type::const_iterator;

    LinComb() = default;
    explicit LinComb(K monomial, Rational coeff = 1) { add(std::move(monomial), coeff); }

    void add(const K& monomial, const Rational& coeff) {
        if (coeff == 0) return;
        auto [it, inserted] = terms_.try_emplace(monomial, coeff);
        if (!inserted) {
            it->second += coeff;
            if (it->second == 0) terms_.erase(it);
        }
    }

    void add(const LinComb& other, const Rational& scale) {
        if (scale == 0) return;
        for (const auto& [m, c] : other.terms_) add(m, c * scale);
    }

    Rational coeff(const K& monomial) const {
        auto it = terms_.find(monomial);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    bool empty() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }
    const_iterator begin() const noexcept { return terms_.begin(); }
    const_iterator end() const noexcept { return terms_.end(); }
    const map_type& terms() const noexcept { return terms_; }

    LinComb& operator+=(const LinComb& o) {
        add(o, Rational(1));
        return *this;
    }
    LinComb& operator-=(const LinComb& o) {
        add(o, Rational(-1));
        return *this;
    }
    LinComb& operator*=(const Rational& c) {
        if (c == 0) {
            terms_.clear();
        } else {
            for (auto& [m, v] : terms_) v *= c;
        }
        return *this;
    }

    friend LinComb operator+(LinComb a, const LinComb& b) { return a += b; }
    friend LinComb operator-(LinComb a, const LinComb& b) { return a -= b; }
    friend LinComb operator-(LinComb a) { return a *= Rational(-1); }
    friend LinComb operator*(const Rational& c, LinComb a) { return a *= c; }
    friend bool operator==(const LinComb& a, const LinComb& b) { return a.terms_ == b.terms_; }

  private:
    map_type terms_;
};

template <class K>
LinComb<K> lc_add(const LinComb<K>& a, const LinComb<K>& b) {
    return a + b;
}

template <class K>
LinComb<K> lc_scale(const Rational& c, const LinComb<K>& a) {
    return c * a;
}

// Bilinear extension of a monomial-level product.
template <class K, class Mul>
LinComb<K> bilinear(const LinComb<K>& a, const LinComb<K>& b, Mul&& mul) {
    LinComb<K> out;
    for (const auto& [ma, ca] : a)
        for (const auto& [mb, cb] : b) out.add(mul(ma, mb), ca * cb);
    return out;
}

// Linear extension of a map from monomials to LinComb<R>.
template <class R, class K, class F>
LinComb<R> linear_map(const LinComb<K>& a, F&& f) {
    LinComb<R> out;
    for (const auto& [m, c] : a) out.add(f(m), c);
    return out;
}

/// Rank over the rationals of the coefficient matrix whose rows are the
/// given vectors, by exact Gaussian elimination on sparse rows.
template <class K>
std::size_t lc_rank(std::span<const LinComb<K>> vectors) {
    std::map<K, std::size_t> column;
    using Row = std::map<std::size_t, Rational>;
    std::vector<Row> rows;
    rows.reserve(vectors.size());
    for (const auto& v : vectors) {
        Row row;
        for (const auto& [m, c] : v) {
            auto [it, _] = column.try_emplace(m, column.size());
            row.emplace(it->second, c);
        }
        rows.push_back(std::move(row));
    }

    // pivot column -> reduced row with leading entry 1 at that column
    std::map<std::size_t, Row> pivots;
    for (auto& row : rows) {
        while (!row.empty()) {
            auto lead = row.begin();
            auto p = pivots.find(lead->first);
            if (p == pivots.end()) {
                Rational inv = 1 / lead->second;
                for (auto& [_, c] : row) c *= inv;
                std::size_t col = lead->first;
                pivots.emplace(col, std::move(row));
                break;
            }
            Rational f = lead->second;
            for (const auto& [col, c] : p->second) {
                auto& entry = row[col];
                entry -= f * c;
                if (entry == 0) row.erase(col);
            }
        }
    }
    return pivots.size();
}

template <class K>
std::size_t lc_rank(const std::vector<LinComb<K>>& vectors) {
    return lc_rank(std::span<const LinComb<K>>(vectors));
}

} // namespace gdalg

#endif
