#include "cds/rational.hpp"

#include <cctype>

namespace cds {

std::string format_rational(const Rational& r) {
    return numerator(r).str() + "/" + denominator(r).str();
}

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

// Parses an optionally signed integer literal.
BigInt parse_int(std::string_view s, std::string_view whole) {
    bool neg = false;
    if (!s.empty() && (s[0] == '-' || s[0] == '+')) {
        neg = s[0] == '-';
        s.remove_prefix(1);
    }
    if (!all_digits(s)) throw ParseError("bad rational '" + std::string(whole) + "'");
    BigInt v(std::string(s));
    return neg ? -v : v;
}

} // namespace

Rational parse_rational(std::string_view text) {
    if (text.empty()) throw ParseError("empty rational");
    auto slash = text.find('/');
    if (slash != std::string_view::npos) {
        BigInt num = parse_int(text.substr(0, slash), text);
        std::string_view den_s = text.substr(slash + 1);
        if (!all_digits(den_s)) throw ParseError("bad rational '" + std::string(text) + "'");
        BigInt den{std::string(den_s)};
        if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
        return Rational(num, den);
    }
    auto dot = text.find('.');
    if (dot != std::string_view::npos) {
        BigInt whole = parse_int(text.substr(0, dot), text);
        std::string_view frac = text.substr(dot + 1);
        if (!all_digits(frac)) throw ParseError("bad rational '" + std::string(text) + "'");
        BigInt scale = 1;
        for (size_t i = 0; i < frac.size(); ++i) scale *= 10;
        BigInt frac_num{std::string(frac)};
        bool neg = text[0] == '-';
        BigInt total = abs(whole) * scale + frac_num;
        return Rational(neg ? -total : total, scale);
    }
    return Rational(parse_int(text, text));
}

} // namespace cds
