#include "gdalg/term.hpp"

#include <algorithm>

namespace gdalg {

Term Term::gen(int index) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Leaf;
    n->gen = index;
    return Term(std::move(n));
}

Term Term::make_node(Kind kind, const Term& left, const Term& right) {
    auto n = std::make_shared<Node>();
    n->kind = kind;
    n->degree = left.degree() + right.degree();
    n->has_bracket = kind == Kind::Bracket || left.uses_bracket() || right.uses_bracket();
    n->left = left.node_;
    n->right = right.node_;
    return Term(std::move(n));
}

Term Term::circ(Term left, Term right) { return make_node(Kind::Circ, left, right); }
Term Term::bracket(Term left, Term right) { return make_node(Kind::Bracket, left, right); }

std::vector<int> Term::leaves() const {
    std::vector<int> out;
    std::vector<const Node*> stack{node_.get()};
    while (!stack.empty()) {
        const Node* n = stack.back();
        stack.pop_back();
        if (n->kind == Kind::Leaf) {
            out.push_back(n->gen);
        } else {
            stack.push_back(n->right.get());
            stack.push_back(n->left.get());
        }
    }
    return out;
}

std::strong_ordering operator<=>(const Term& a, const Term& b) {
    if (a.node_ == b.node_) return std::strong_ordering::equal;
    if (auto c = a.degree() <=> b.degree(); c != 0) return c;
    if (auto c = a.kind() <=> b.kind(); c != 0) return c;
    if (a.is_leaf()) return a.gen_index() <=> b.gen_index();
    if (auto c = a.left() <=> b.left(); c != 0) return c;
    return a.right() <=> b.right();
}

namespace {

void print(const Term& t, bool bare, std::string& out) {
    switch (t.kind()) {
    case Term::Kind::Leaf:
        out += 'x';
        out += std::to_string(t.gen_index());
        return;
    case Term::Kind::Circ:
        if (!bare) out += '(';
        print(t.left(), false, out);
        out += " o ";
        print(t.right(), false, out);
        if (!bare) out += ')';
        return;
    case Term::Kind::Bracket:
        out += '[';
        print(t.left(), true, out);
        out += ", ";
        print(t.right(), true, out);
        out += ']';
        return;
    }
}

} // namespace

std::string to_string(const Term& t) {
    std::string out;
    print(t, true, out);
    return out;
}

std::string to_string(const TermComb& c) {
    if (c.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [t, q] : c) {
        Rational mag = abs(q);
        if (first) {
            if (q < 0) out += '-';
        } else {
            out += q < 0 ? " - " : " + ";
        }
        first = false;
        if (mag == 1) {
            out += to_string(t);
        } else {
            out += to_string(mag);
            out += '*';
            std::string body;
            print(t, t.kind() != Term::Kind::Circ, body);
            out += body;
        }
    }
    return out;
}

namespace {

SignedTerm canonical_rec(const Term& t, bool right_comm) {
    if (t.is_leaf()) return {1, t};
    if (t.kind() == Term::Kind::Bracket) {
        auto l = canonical_rec(t.left(), right_comm);
        auto r = canonical_rec(t.right(), right_comm);
        int sign = l.sign * r.sign;
        if (r.term < l.term) return {-sign, Term::bracket(r.term, l.term)};
        return {sign, Term::bracket(l.term, r.term)};
    }
    if (!right_comm) {
        auto l = canonical_rec(t.left(), right_comm);
        auto r = canonical_rec(t.right(), right_comm);
        return {l.sign * r.sign, Term::circ(l.term, r.term)};
    }
    // ((head o f1) o f2) ... o fk: the fi commute
    std::vector<Term> factors;
    Term head = t;
    while (head.kind() == Term::Kind::Circ) {
        factors.push_back(head.right());
        head = head.left();
    }
    auto h = canonical_rec(head, right_comm);
    int sign = h.sign;
    std::vector<Term> canon;
    for (const auto& f : factors) {
        auto cf = canonical_rec(f, right_comm);
        sign *= cf.sign;
        canon.push_back(cf.term);
    }
    std::sort(canon.begin(), canon.end());
    Term out = h.term;
    for (const auto& f : canon) out = Term::circ(out, f);
    return {sign, out};
}

} // namespace

SignedTerm canonical_form(const Term& t, bool right_commutative) { return canonical_rec(t, right_commutative); }

TermComb canonical_form(const TermComb& c, bool right_commutative) {
    TermComb out;
    for (const auto& [t, q] : c) {
        auto s = canonical_rec(t, right_commutative);
        out.add(s.term, q * s.sign);
    }
    return out;
}

} // namespace gdalg
