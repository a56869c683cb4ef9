#ifndef GDALG_COMDER_HPP
#define GDALG_COMDER_HPP

#include "gdalg/lincomb.hpp"

#include <compare>
#include <initializer_list>
#include <string>
#include <vector>

namespace gdalg {

/// x_gen^(order): a generator with `order` applications of the derivation.
///
/// Letters are ordered by derivative order first, then by generator index,
/// so x2 < x1' < x1'' < x2''.
struct DLetter {
    int gen = 1;
    int order = 0;

    friend constexpr std::strong_ordering operator<=>(const DLetter& a, const DLetter& b) {
        if (auto c = a.order <=> b.order; c != 0) return c;
        return a.gen <=> b.gen;
    }
    friend constexpr bool operator==(const DLetter&, const DLetter&) = default;
};

constexpr bool letter_less(const DLetter& a, const DLetter& b) { return a < b; }

/// Standard basis monomial of ComDer<X>: a multiset of letters, stored sorted.
class CDMonomial {
  public:
    CDMonomial() = default;
    explicit CDMonomial(std::vector<DLetter> letters);
    CDMonomial(std::initializer_list<DLetter> letters) : CDMonomial(std::vector<DLetter>(letters)) {}

    const std::vector<DLetter>& letters() const noexcept { return letters_; }
    std::size_t degree() const noexcept { return letters_.size(); }

    friend auto operator<=>(const CDMonomial&, const CDMonomial&) = default;
    friend bool operator==(const CDMonomial&, const CDMonomial&) = default;

  private:
    std::vector<DLetter> letters_;
};

using CDPoly = LinComb<CDMonomial>;

CDPoly cd_letter(int gen, int order = 0);
CDMonomial cd_monomial_mul(const CDMonomial& a, const CDMonomial& b);
CDPoly cd_mul(const CDPoly& p, const CDPoly& q);
CDPoly cd_derive(const CDPoly& p);
int cd_weight(const CDMonomial& m);

// Weight shared by every monomial of p; throws WeightError if p is zero or
// mixes weights.
int cd_homogeneous_weight(const CDPoly& p);

// u o v = u d(v)
CDPoly nov_circ(const CDPoly& p, const CDPoly& q);

// Standard basis monomials with `degree` letters and the given total weight.
// With `multilinear`, generators are exactly 1..degree, each once, and
// num_gens is ignored.
std::vector<CDMonomial> cd_enumerate(int num_gens, int degree, int weight, bool multilinear);

// letters print as x1, x1', x1'', x1''', then x1^(4) and up
std::string to_string(const DLetter& l);
std::string to_string(const CDMonomial& m);
std::string to_string(const CDPoly& p);

} // namespace gdalg

#endif
