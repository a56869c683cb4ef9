#include "gdalg/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace gdalg {

std::string to_string(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational parse_rational(std::string_view text) {
    auto digits_ok = [](std::string_view s) {
        if (s.empty()) return false;
        for (char c : s)
            if (!std::isdigit(static_cast<unsigned char>(c))) return false;
        return true;
    };
    std::string_view body = text;
    bool negative = false;
    if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
        negative = body.front() == '-';
        body.remove_prefix(1);
    }
    auto slash = body.find('/');
    std::string_view num = body.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
    if (!digits_ok(num) || !digits_ok(den))
        throw std::invalid_argument("malformed rational: " + std::string(text));
    mpz_class d(std::string(den), 10);
    if (d == 0) throw std::invalid_argument("zero denominator: " + std::string(text));
    Rational q(mpz_class(std::string(num), 10), d);
    q.canonicalize();
    return negative ? Rational(-q) : q;
}

} // namespace gdalg
