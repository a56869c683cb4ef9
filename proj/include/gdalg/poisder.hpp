#ifndef GDALG_POISDER_HPP
#define GDALG_POISDER_HPP

#include "gdalg/lyndon.hpp"

#include <string>
#include <vector>

namespace gdalg {

/// Standard basis monomial of PoisDer<X> = Pois<X_inf>: a commutative
/// product A_1 ... A_n of LS words with A_1 <= ... <= A_n under ls_less.
class PoisMonomial {
  public:
    PoisMonomial() = default;
    explicit PoisMonomial(std::vector<LSWord> factors);

    const std::vector<LSWord>& factors() const noexcept { return factors_; }
    // number of generator occurrences
    int degree() const noexcept;

    friend bool operator==(const PoisMonomial&, const PoisMonomial&) = default;
    friend bool operator<(const PoisMonomial& a, const PoisMonomial& b) { return a.factors_ < b.factors_; }

  private:
    std::vector<LSWord> factors_;
};

using PoisPoly = LinComb<PoisMonomial>;

PoisPoly pois_letter(int gen, int order = 0);
PoisPoly pois_from_lie(const LiePoly& p);

PoisMonomial pois_monomial_mul(const PoisMonomial& a, const PoisMonomial& b);
PoisPoly pois_mul(const PoisPoly& p, const PoisPoly& q);

// Bi-Leibniz expansion into brackets of single LS factors, each in the LS basis.
PoisPoly pois_bracket(const PoisPoly& p, const PoisPoly& q);
PoisPoly pois_derive(const PoisPoly& p);

// Sum over factors of (sum of letter orders - 1).
int pois_weight(const PoisMonomial& m);
int pois_homogeneous_weight(const PoisPoly& p);

// a o b = a d(b) and [a, b] = {a, b}; both inputs must be weight -1 homogeneous.
PoisPoly sgd_circ(const PoisPoly& p, const PoisPoly& q);
PoisPoly sgd_bracket(const PoisPoly& p, const PoisPoly& q);

/// All basis monomials with `degree` generator occurrences and the given
/// weight, ascending. With `multilinear`, generators are exactly 1..degree,
/// each once.
std::vector<PoisMonomial> pois_enumerate(int num_gens, int degree, int weight, bool multilinear);

std::string to_string(const PoisMonomial& m);
std::string to_string(const PoisPoly& p);

} // namespace gdalg

#endif
