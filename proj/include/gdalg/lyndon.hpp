#ifndef GDALG_LYNDON_HPP
#define GDALG_LYNDON_HPP

#include "gdalg/comder.hpp"
#include "gdalg/lincomb.hpp"

#include <memory>
#include <string>
#include <vector>

namespace gdalg {

// Associative word over the alphabet X_inf = { x_i^(r) }.
using AWord = std::vector<DLetter>;

/// Shirshov's order on words: compare first letters, then the tails; the
/// empty word is greater than every nonempty word, so a proper prefix is
/// greater than the whole word.
bool word_less(const AWord& u, const AWord& v);

/// Associative Lyndon-Shirshov word: strictly greater than every proper rotation.
bool is_ls(const AWord& w);

/// Bracket expression over letters of X_inf.
class LieTree {
  public:
    static LieTree letter(DLetter l);
    static LieTree bracket(LieTree left, LieTree right);

    bool is_letter() const noexcept { return node_->left == nullptr; }
    DLetter get_letter() const noexcept { return node_->letter; }
    LieTree left() const { return LieTree(node_->left); }
    LieTree right() const { return LieTree(node_->right); }
    int degree() const noexcept { return node_->degree; }

    // the associative word obtained by erasing brackets
    AWord word() const;

  private:
    struct Node {
        DLetter letter{};
        int degree = 1;
        std::shared_ptr<const Node> left, right;
    };
    explicit LieTree(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
    std::shared_ptr<const Node> node_;
};

/// Nonassociative Lyndon-Shirshov word: an associative LS word with its
/// standard bracketing. Ordered by ls_less; equal iff the words are equal.
class LSWord {
  public:
    const AWord& word() const noexcept { return word_; }
    const LieTree& tree() const noexcept { return tree_; }
    int degree() const noexcept { return static_cast<int>(word_.size()); }
    // true if some letter carries a derivative
    bool involves_d() const noexcept;
    int order_sum() const noexcept;

    friend bool operator==(const LSWord& a, const LSWord& b) { return a.word_ == b.word_; }
    friend bool operator<(const LSWord& a, const LSWord& b);

  private:
    friend LSWord ls_bracket(const AWord& w);
    LSWord(AWord w, LieTree t) : word_(std::move(w)), tree_(std::move(t)) {}

    AWord word_;
    LieTree tree_;
};

/// Standard bracketing: w = u v with v the longest proper LS suffix, applied
/// recursively. Throws NotLSError unless is_ls(w).
LSWord ls_bracket(const AWord& w);

// Checks (LS1)-(LS3) on an arbitrary bracket expression.
bool satisfies_ls_conditions(const LieTree& t);

/// Order on LS words: single letters sit between d-free words of degree >= 2
/// (below) and words of degree >= 2 involving d (above); inside each class,
/// higher degree is greater, then word_less.
bool ls_less(const LSWord& a, const LSWord& b);

using LiePoly = LinComb<LSWord>;
using AssocPoly = LinComb<AWord>;

// [p, q] -> pq - qp, recursively.
AssocPoly lie_expand(const LieTree& t);

/// The LS-basis combination equal to t. Peels the word_less-greatest word of
/// the associative expansion; throws NotLieElementError if that word is not
/// LS (cannot happen for a bracket expression, only for foreign input).
LiePoly lie_nf(const LieTree& t);
LiePoly lie_nf(const AssocPoly& p);

// lie_nf([a, b]) for basis words, cached.
const LiePoly& ls_bracket_nf(const LSWord& a, const LSWord& b);

// d applied to an LS word (Leibniz over its letters), in the LS basis; cached.
const LiePoly& ls_derive(const LSWord& a);

/// All LS words of the given length over { x_i^(r) : 1 <= i <= max_gen,
/// 0 <= r <= max_order }, generated by Duval's algorithm; ascending word_less.
std::vector<LSWord> ls_enumerate(int max_gen, int max_order, int degree);

std::string to_string(const AWord& w);
std::string to_string(const LieTree& t);
std::string to_string(const LSWord& w);
std::string to_string(const LiePoly& p);

} // namespace gdalg

#endif
