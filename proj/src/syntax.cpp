#include "gdalg/syntax.hpp"

#include "gdalg/errors.hpp"

#include <cctype>
#include <functional>
#include <limits>
#include <optional>

namespace gdalg {

namespace {

class Parser {
  public:
    explicit Parser(std::string_view s) : s_(s) {}

    [[noreturn]] void fail(std::vector<std::string> expected) const {
        throw SyntaxError(std::string(s_), pos_, std::move(expected));
    }

    void ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool at_end() {
        ws();
        return pos_ == s_.size();
    }

    bool peek(char c) {
        ws();
        return pos_ < s_.size() && s_[pos_] == c;
    }

    bool accept(char c) {
        if (!peek(c)) return false;
        ++pos_;
        return true;
    }

    void expect(char c) {
        if (!accept(c)) fail({std::string("'") + c + "'"});
    }

    void finish() {
        if (!at_end()) fail({"end of input"});
    }

    // digits at the current position, no leading whitespace skipping
    std::optional<long> digits() {
        std::size_t start = pos_;
        long v = 0;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            if (v > std::numeric_limits<int>::max() / 10) {
                pos_ = start;
                fail({"a smaller number"});
            }
            v = v * 10 + (s_[pos_++] - '0');
        }
        if (pos_ == start) return std::nullopt;
        return v;
    }

    int gen() {
        if (!accept('x')) fail({"generator"});
        std::size_t at = pos_;
        auto v = digits();
        if (!v || *v < 1) {
            pos_ = at;
            fail({"generator index >= 1"});
        }
        return static_cast<int>(*v);
    }

    // "o" as an operator: a standalone letter, not the start of a word
    bool accept_circ() {
        ws();
        if (pos_ < s_.size() && s_[pos_] == 'o') {
            const std::size_t next = pos_ + 1;
            if (next == s_.size() || !std::isalnum(static_cast<unsigned char>(s_[next]))) {
                pos_ = next;
                return true;
            }
        }
        return false;
    }

    // `operand` or `operand o operand`; `closed` tells whether an "o" was read
    Term term(bool* closed = nullptr) {
        Term l = operand();
        const bool circ = accept_circ();
        if (closed) *closed = circ;
        return circ ? Term::circ(l, operand()) : l;
    }

    // the delimiter after a term, or "o" as well if the term was a lone operand
    void close_term(bool closed, char c) {
        if (accept(c)) return;
        const std::string tok = std::string("'") + c + "'";
        if (closed) fail({tok});
        fail({"'o'", tok});
    }

    Term operand() {
        ws();
        bool closed = false;
        if (accept('(')) {
            Term t = term(&closed);
            close_term(closed, ')');
            return t;
        }
        if (accept('[')) {
            Term l = term(&closed);
            close_term(closed, ',');
            Term r = term(&closed);
            close_term(closed, ']');
            return Term::bracket(l, r);
        }
        if (peek('x')) return Term::gen(gen());
        fail({"generator", "'('", "'['"});
    }

    std::optional<Rational> rational() {
        ws();
        auto num = digits();
        if (!num) return std::nullopt;
        Rational q(static_cast<long>(*num));
        if (pos_ < s_.size() && s_[pos_] == '/') {
            ++pos_;
            std::size_t at = pos_;
            auto den = digits();
            if (!den || *den == 0) {
                pos_ = at;
                fail({"nonzero denominator"});
            }
            q /= Rational(static_cast<long>(*den));
        }
        return q;
    }

    // signed sum of summands; `close` is the delimiter that must follow, if any
    template <class Poly, class Summand>
    Poly sum(Summand summand, char close) {
        Poly out;
        Rational sign = 1;
        if (accept('-')) sign = -1;
        else accept('+');
        for (;;) {
            Rational c = 1;
            if (auto q = rational()) {
                c = *q;
                accept('*');
            }
            out.add(summand(), sign * c);
            if (accept('+')) sign = 1;
            else if (accept('-')) sign = -1;
            else break;
        }
        if (close && !peek(close)) fail({"'+'", "'-'", std::string("'") + close + "'"});
        return out;
    }

    TermComb term_comb() {
        return sum<TermComb>([&] { return TermComb(term()); }, 0);
    }

    DLetter dgen() {
        const int g = gen();
        int order = 0;
        if (pos_ < s_.size() && s_[pos_] == '\'') {
            while (pos_ < s_.size() && s_[pos_] == '\'') {
                if (order == 3) fail({"at most three apostrophes; use ^(r)"});
                ++order;
                ++pos_;
            }
        } else if (pos_ < s_.size() && s_[pos_] == '^') {
            ++pos_;
            expect('(');
            ws();
            std::size_t at = pos_;
            auto v = digits();
            if (!v) {
                pos_ = at;
                fail({"derivative order"});
            }
            order = static_cast<int>(*v);
            expect(')');
        }
        return {g, order};
    }

    template <class Poly, class Letter, class Mul, class Bracket>
    Poly poly(char close, Letter letter, Mul mul, Bracket bracket) {
        std::function<Poly()> factor;
        std::function<Poly(char)> whole = [&](char c) {
            return sum<Poly>(
                [&] {
                    Poly p = factor();
                    while (accept('*')) p = mul(p, factor());
                    return p;
                },
                c);
        };
        factor = [&]() -> Poly {
            ws();
            if (peek('x')) return letter(dgen());
            if (accept('(')) {
                Poly p = whole(')');
                expect(')');
                return p;
            }
            if (bracket && accept('{')) {
                Poly l = whole(',');
                expect(',');
                Poly r = whole('}');
                expect('}');
                return (*bracket)(l, r);
            }
            if (bracket) fail({"generator", "'('", "'{'"});
            fail({"generator", "'('"});
        };
        return whole(close);
    }

  private:
    std::string_view s_;
    std::size_t pos_ = 0;
};

using PoisBracketFn = PoisPoly (*)(const PoisPoly&, const PoisPoly&);
using CDBracketFn = CDPoly (*)(const CDPoly&, const CDPoly&);

} // namespace

Term parse_term(std::string_view s) {
    Parser p(s);
    bool closed = false;
    Term t = p.term(&closed);
    if (!p.at_end()) p.fail(closed ? std::vector<std::string>{"end of input"}
                                   : std::vector<std::string>{"'o'", "end of input"});
    return t;
}

TermComb parse_term_comb(std::string_view s) {
    Parser p(s);
    TermComb c = p.term_comb();
    p.finish();
    return c;
}

PoisPoly parse_pois(std::string_view s) {
    Parser p(s);
    std::optional<PoisBracketFn> br = &pois_bracket;
    PoisPoly out = p.poly<PoisPoly>(
        0, [](DLetter l) { return pois_letter(l.gen, l.order); }, &pois_mul, br);
    p.finish();
    return out;
}

CDPoly parse_cd(std::string_view s) {
    Parser p(s);
    std::optional<CDBracketFn> none;
    CDPoly out = p.poly<CDPoly>(0, [](DLetter l) { return cd_letter(l.gen, l.order); }, &cd_mul, none);
    p.finish();
    return out;
}

} // namespace gdalg
