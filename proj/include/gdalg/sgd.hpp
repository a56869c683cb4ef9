#ifndef GDALG_SGD_HPP
#define GDALG_SGD_HPP

#include "gdalg/poisder.hpp"
#include "gdalg/term.hpp"

#include <string>
#include <vector>

namespace gdalg {

/// Normal form of a weight -1 basis monomial of PoisDer<X>:
///
///   x_{i_1} ... x_{i_k}  B_1 ... B_m  A_n ... A_1  x_{j_l}^{(r_l)} ... x_{j_1}^{(r_1)}
///
/// B words are d-free LS words of degree >= 2 (weight -1 each, so they act
/// like generators), A words are LS words of degree >= 2 involving d.
struct PoisNF {
    std::vector<int> plain;            // ascending
    std::vector<LSWord> b_words;       // B_1 <= ... <= B_m
    std::vector<LSWord> a_words;       // A_n >= ... >= A_1
    std::vector<DLetter> derived;      // descending, orders >= 1
    int sign = 1;                      // stored factors are already LS-oriented

    PoisMonomial monomial() const;
};

/// Comparison key for Poisson normal forms. Every LS factor is treated as a
/// letter whose order is its letter-order sum, as in the Novikov key:
/// orders >= 2 first, then the order-1 factors, then the order-0 factors.
/// Lists compare lexicographically, a proper prefix being smaller.
struct PoisKey {
    std::vector<int> orders;       // order sums >= 2, descending
    std::vector<LSWord> primed;    // order-sum-1 factors, ascending under ls_less
    std::vector<LSWord> plain;     // order-sum-0 factors: higher degree first, then word order
    std::vector<LSWord> high;      // order-sum >= 2 factors, descending; tie-break

    friend bool operator<(const PoisKey& a, const PoisKey& b);
};

PoisNF pnf_classify(const PoisMonomial& m);
PoisKey pnf_key(const PoisNF& a);
bool pnf_less(const PoisNF& a, const PoisNF& b);

/// Term for a d-free LS word: its standard bracketing with brackets as [,].
Term lie_word_term(const LSWord& w);

/// The basis term for a normal form. A words are absorbed greatest first:
/// an A word with letter-order sum k takes the k greatest weight -1 items
/// (generators < B words < terms built earlier); its letters, sorted
/// descending, take blocks of items of their orders from the top and become
/// phi-chains; the bracket shape of the result is the standard bracketing of
/// the A word. The remaining items and derived letters go through phi.
Term psi(const PoisNF& a);

struct SignedBasisTerm {
    int sign = 1;
    Term term;
};

/// psi rescaled so that its expansion has leading coefficient +1.
/// Throws SignError if the coefficient of a in tau2(psi(a)) is not +-1.
SignedBasisTerm psi_hat(const PoisNF& a);

PoisPoly tau2(const Term& t);

TermComb sgd_reduce(const PoisPoly& p);

enum class SgdOp { Circ, Bracket };
TermComb sgd_multiply(const Term& a, const Term& b, SgdOp op);

// psi over all weight -1 normal forms of the given size.
std::vector<Term> sgd_basis(int num_gens, int degree, bool multilinear);

} // namespace gdalg

#endif
