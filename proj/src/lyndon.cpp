#include "gdalg/lyndon.hpp"

#include "gdalg/errors.hpp"
#include "gdalg/novikov.hpp"

#include <algorithm>
#include <map>
#include <mutex>

namespace gdalg {

bool word_less(const AWord& u, const AWord& v) {
    const std::size_t n = std::min(u.size(), v.size());
    for (std::size_t i = 0; i < n; ++i)
        if (u[i] != v[i]) return u[i] < v[i];
    return u.size() > v.size();
}

bool is_ls(const AWord& w) {
    if (w.empty()) return false;
    AWord rot(w.size());
    for (std::size_t k = 1; k < w.size(); ++k) {
        std::rotate_copy(w.begin(), w.begin() + k, w.end(), rot.begin());
        if (!word_less(rot, w)) return false;
    }
    return true;
}

LieTree LieTree::letter(DLetter l) {
    auto n = std::make_shared<Node>();
    n->letter = l;
    return LieTree(std::move(n));
}

LieTree LieTree::bracket(LieTree left, LieTree right) {
    auto n = std::make_shared<Node>();
    n->degree = left.degree() + right.degree();
    n->left = std::move(left.node_);
    n->right = std::move(right.node_);
    return LieTree(std::move(n));
}

AWord LieTree::word() const {
    if (is_letter()) return {get_letter()};
    AWord w = left().word();
    AWord r = right().word();
    w.insert(w.end(), r.begin(), r.end());
    return w;
}

bool LSWord::involves_d() const noexcept {
    return std::any_of(word_.begin(), word_.end(), [](const DLetter& l) { return l.order > 0; });
}

int LSWord::order_sum() const noexcept {
    int s = 0;
    for (const auto& l : word_) s += l.order;
    return s;
}

bool operator<(const LSWord& a, const LSWord& b) { return ls_less(a, b); }

namespace {

LieTree standard_tree(const AWord& w) {
    if (w.size() == 1) return LieTree::letter(w.front());
    for (std::size_t i = 1; i < w.size(); ++i) {
        AWord v(w.begin() + i, w.end());
        if (is_ls(v)) return LieTree::bracket(standard_tree(AWord(w.begin(), w.begin() + i)), standard_tree(v));
    }
    throw NotLSError("no LS suffix in " + to_string(w)); // unreachable: the last letter is LS
}

} // namespace

LSWord ls_bracket(const AWord& w) {
    if (!is_ls(w)) throw NotLSError("not a Lyndon-Shirshov word: " + to_string(w));
    return LSWord(w, standard_tree(w));
}

bool satisfies_ls_conditions(const LieTree& t) {
    if (!is_ls(t.word())) return false; // LS1
    if (t.is_letter()) return true;
    const LieTree u1 = t.left(), u2 = t.right();
    if (!satisfies_ls_conditions(u1) || !satisfies_ls_conditions(u2)) return false;
    if (!word_less(u2.word(), u1.word())) return false; // LS2
    if (!u1.is_letter() && word_less(u2.word(), u1.right().word())) return false; // LS3
    return true;
}

bool ls_less(const LSWord& a, const LSWord& b) {
    auto cls = [](const LSWord& w) { return w.degree() == 1 ? 1 : (w.involves_d() ? 2 : 0); };
    const int ca = cls(a), cb = cls(b);
    if (ca != cb) return ca < cb;
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return word_less(a.word(), b.word());
}

AssocPoly lie_expand(const LieTree& t) {
    if (t.is_letter()) return AssocPoly(AWord{t.get_letter()});
    const AssocPoly l = lie_expand(t.left()), r = lie_expand(t.right());
    auto concat = [](const AWord& a, const AWord& b) {
        AWord w = a;
        w.insert(w.end(), b.begin(), b.end());
        return w;
    };
    AssocPoly out = bilinear(l, r, concat);
    out -= bilinear(r, l, concat);
    return out;
}

namespace {

std::mutex cache_mutex;

const AssocPoly& expansion_of(const LSWord& w) {
    static std::map<AWord, AssocPoly> cache;
    {
        std::lock_guard lock(cache_mutex);
        if (auto it = cache.find(w.word()); it != cache.end()) return it->second;
    }
    AssocPoly e = lie_expand(w.tree());
    std::lock_guard lock(cache_mutex);
    return cache.emplace(w.word(), std::move(e)).first->second;
}

} // namespace

LiePoly lie_nf(const AssocPoly& input) {
    AssocPoly p = input;
    LiePoly out;
    while (!p.empty()) {
        auto top = p.begin();
        for (auto it = std::next(p.begin()); it != p.end(); ++it)
            if (word_less(top->first, it->first)) top = it;
        const AWord w = top->first;
        const Rational c = top->second;
        if (!is_ls(w)) throw NotLieElementError("leading word " + to_string(w) + " is not Lyndon-Shirshov");
        LSWord basis = ls_bracket(w);
        out.add(basis, c);
        p.add(expansion_of(basis), -c);
    }
    return out;
}

LiePoly lie_nf(const LieTree& t) { return lie_nf(lie_expand(t)); }

const LiePoly& ls_bracket_nf(const LSWord& a, const LSWord& b) {
    static std::map<std::pair<AWord, AWord>, LiePoly> cache;
    auto key = std::make_pair(a.word(), b.word());
    {
        std::lock_guard lock(cache_mutex);
        if (auto it = cache.find(key); it != cache.end()) return it->second;
    }
    LiePoly v = a == b ? LiePoly{} : lie_nf(LieTree::bracket(a.tree(), b.tree()));
    std::lock_guard lock(cache_mutex);
    return cache.emplace(std::move(key), std::move(v)).first->second;
}

namespace {

// All trees obtained from t by raising the order of exactly one leaf.
void derive_tree(const LieTree& t, std::vector<LieTree>& out) {
    if (t.is_letter()) {
        DLetter l = t.get_letter();
        ++l.order;
        out.push_back(LieTree::letter(l));
        return;
    }
    std::vector<LieTree> ls, rs;
    derive_tree(t.left(), ls);
    derive_tree(t.right(), rs);
    for (auto& l : ls) out.push_back(LieTree::bracket(l, t.right()));
    for (auto& r : rs) out.push_back(LieTree::bracket(t.left(), r));
}

} // namespace

const LiePoly& ls_derive(const LSWord& a) {
    static std::map<AWord, LiePoly> cache;
    {
        std::lock_guard lock(cache_mutex);
        if (auto it = cache.find(a.word()); it != cache.end()) return it->second;
    }
    std::vector<LieTree> terms;
    derive_tree(a.tree(), terms);
    AssocPoly sum;
    for (const auto& t : terms) sum += lie_expand(t);
    LiePoly v = lie_nf(sum);
    std::lock_guard lock(cache_mutex);
    return cache.emplace(a.word(), std::move(v)).first->second;
}

std::vector<LSWord> ls_enumerate(int max_gen, int max_order, int degree) {
    std::vector<LSWord> out;
    if (max_gen < 1 || max_order < 0 || degree < 1) return out;
    // Duval's algorithm produces words that are lexicographically smaller than
    // their rotations. Listing the alphabet in decreasing letter order turns
    // that into "greater than every rotation" under word_less.
    std::vector<DLetter> alphabet;
    for (int r = max_order; r >= 0; --r)
        for (int g = max_gen; g >= 1; --g) alphabet.push_back({g, r});
    const int k = static_cast<int>(alphabet.size());

    std::vector<int> w{-1};
    while (!w.empty()) {
        ++w.back();
        if (static_cast<int>(w.size()) == degree) {
            AWord word;
            for (int i : w) word.push_back(alphabet[i]);
            out.push_back(ls_bracket(word));
        }
        const std::size_t m = w.size();
        while (static_cast<int>(w.size()) < degree) w.push_back(w[w.size() - m]);
        while (!w.empty() && w.back() == k - 1) w.pop_back();
    }
    std::sort(out.begin(), out.end(), [](const LSWord& a, const LSWord& b) { return word_less(a.word(), b.word()); });
    return out;
}

std::string to_string(const AWord& w) {
    std::string s;
    for (const auto& l : w) {
        if (!s.empty()) s += ' ';
        s += to_string(l);
    }
    return s;
}

std::string to_string(const LieTree& t) {
    if (t.is_letter()) return to_string(t.get_letter());
    return "{" + to_string(t.left()) + ", " + to_string(t.right()) + "}";
}

std::string to_string(const LSWord& w) { return to_string(w.tree()); }

std::string to_string(const LiePoly& p) {
    if (p.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [w, c] : p) {
        Rational mag = abs(c);
        if (first) {
            if (c < 0) out += '-';
        } else {
            out += c < 0 ? " - " : " + ";
        }
        first = false;
        if (mag != 1) out += to_string(mag) + "*";
        out += to_string(w);
    }
    return out;
}

} // namespace gdalg
