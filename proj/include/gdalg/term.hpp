#ifndef GDALG_TERM_HPP
#define GDALG_TERM_HPP

#include "gdalg/lincomb.hpp"

#include <compare>
#include <memory>
#include <string>
#include <vector>

namespace gdalg {

/// Nonassociative term over generators x1, x2, ... with a Novikov product
/// (circ) and, for SGD terms, a bracket. Immutable; subtrees are shared.
///
/// A term that uses only Circ is an element of Magma<X>; with Bracket it is
/// an element of Magma_2<X>.
class Term {
  public:
    enum class Kind { Leaf, Circ, Bracket };

    static Term gen(int index);
    static Term circ(Term left, Term right);
    static Term bracket(Term left, Term right);

    Kind kind() const noexcept { return node_->kind; }
    bool is_leaf() const noexcept { return node_->kind == Kind::Leaf; }
    int gen_index() const noexcept { return node_->gen; }
    Term left() const { return Term(node_->left); }
    Term right() const { return Term(node_->right); }

    // number of generator occurrences
    int degree() const noexcept { return node_->degree; }
    bool uses_bracket() const noexcept { return node_->has_bracket; }
    // generator indices left to right
    std::vector<int> leaves() const;

    // Order: degree, then kind, then generator / children.
    friend std::strong_ordering operator<=>(const Term& a, const Term& b);
    friend bool operator==(const Term& a, const Term& b) { return (a <=> b) == 0; }

  private:
    struct Node {
        Kind kind = Kind::Leaf;
        int gen = 0;
        int degree = 1;
        bool has_bracket = false;
        std::shared_ptr<const Node> left, right;
    };
    explicit Term(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
    static Term make_node(Kind kind, const Term& left, const Term& right);

    std::shared_ptr<const Node> node_;
};

using MagmaTerm = Term;
using Magma2Term = Term;
using TermComb = LinComb<Term>;

/// Paper-style printing: "x1", "x1 o x2", "(x1 o x2) o x3", "[x1, x2 o x3]".
/// A circ that is the whole term or a bracket argument is printed bare;
/// every other circ is parenthesised.
std::string to_string(const Term& t);

// Signed sum; a bare top-level circ with a nonunit coefficient is wrapped,
// e.g. "2*((x1 o x2) o x3)".
std::string to_string(const TermComb& c);

struct SignedTerm {
    int sign = 1;
    Term term;
};

/// Canonical representative of t modulo antisymmetry of the bracket (children
/// of every bracket put in Term order, sign tracked). With right_commutative,
/// also modulo (a o b) o c = (a o c) o b: the right factors of every left
/// circ-comb are sorted.
SignedTerm canonical_form(const Term& t, bool right_commutative);
TermComb canonical_form(const TermComb& c, bool right_commutative);

} // namespace gdalg

#endif
