#ifndef GDALG_NOVIKOV_HPP
#define GDALG_NOVIKOV_HPP

#include "gdalg/comder.hpp"
#include "gdalg/term.hpp"

#include <span>
#include <string>
#include <vector>

namespace gdalg {

/// Normal form of a weight -1 monomial of ComDer<X>:
///
///   x_{i_1} ... x_{i_l}  x_{j_n}^{(r_n)} ... x_{j_1}^{(r_1)}  x'_{k_m} ... x'_{k_1}
///
/// with plain letters ascending, letters of order >= 2 descending and primed
/// letters descending. Weight -1 forces l = r_1 + ... + r_n - n + 1.
struct NovNF {
    std::vector<int> plain;        // i_1 <= ... <= i_l
    std::vector<DLetter> high;     // x_{j_n}^{(r_n)} >= ... >= x_{j_1}^{(r_1)}, all orders >= 2
    std::vector<int> primed;       // k_m >= ... >= k_1

    CDMonomial monomial() const;
    // all letters of order >= 1, descending: high then primed
    std::vector<DLetter> derived() const;

    friend bool operator==(const NovNF&, const NovNF&) = default;
};

/// Comparison key S(a) = (L(a), R(a), M(a)); tuples compare lexicographically
/// with a proper prefix smaller. L(a) lists the orders r_n >= ... >= r_1 of
/// the high letters greatest first, so moving a derivative off a high letter
/// always lowers the key.
struct NovKey {
    std::vector<int> orders;   // L(a)
    std::vector<int> primed;   // R(a)
    std::vector<int> plain;    // M(a)

    friend auto operator<=>(const NovKey&, const NovKey&) = default;
};

NovNF nf_classify(const CDMonomial& m);
NovKey nf_key(const NovNF& a);
bool nf_less(const NovNF& a, const NovNF& b);

/// Core of phi, shared with psi. `items` are weight -1 terms in ascending
/// order; `derived` are letters of order >= 1 in descending order. Each
/// letter of order r takes the r greatest items c_1 < ... < c_r and builds
/// c_r o (c_{r-1} o ... (c_1 o x_j)...), which becomes the new greatest
/// item. Exactly one item must remain (StructureError otherwise).
Term phi_items(std::vector<Term> items, std::span<const DLetter> derived);

Term phi(const NovNF& a);

CDPoly tau_nov(const Term& t);

// Unique combination of basis terms phi(a) whose tau-image is p.
TermComb nov_reduce(const CDPoly& p);
TermComb nov_multiply(const Term& a, const Term& b);

std::vector<Term> nov_basis(int num_gens, int degree, bool multilinear);

/// Young diagram of a partition lambda_1 > lambda_2 >= ... >= lambda_k,
/// filled by generators. rows[m] lists row m left to right; its last entry
/// is t_m, the others are the i-entries.
struct YoungFilling {
    std::vector<int> shape;
    std::vector<std::vector<int>> rows;

    friend auto operator<=>(const YoungFilling&, const YoungFilling&) = default;
};

std::vector<YoungFilling> young_fillings(int num_gens, int degree, bool multilinear);
bool young_filling_valid(const YoungFilling& f);
Term filling_to_term(const YoungFilling& f);


} // namespace gdalg

#endif
