#include "qopt/rational.hpp"

#include <charconv>
#include <stdexcept>

namespace qopt {

namespace {

std::int64_t parse_int(std::string_view s) {
    std::int64_t value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc() || ptr != s.data() + s.size())
        throw std::invalid_argument("not an integer: '" + std::string(s) + "'");
    return value;
}

}  // namespace

Rational parse_rational(const std::string& text) {
    std::string_view s(text);
    if (s.empty()) throw std::invalid_argument("empty rational");

    bool negative = false;
    if (s.front() == '+' || s.front() == '-') {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    if (s.empty()) throw std::invalid_argument("bare sign is not a rational");

    Rational magnitude;
    if (auto slash = s.find('/'); slash != std::string_view::npos) {
        std::int64_t num = parse_int(s.substr(0, slash));
        std::int64_t den = parse_int(s.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("zero denominator");
        magnitude = Rational(num, den);
    } else if (auto dot = s.find('.'); dot != std::string_view::npos) {
        std::string_view whole = s.substr(0, dot);
        std::string_view frac = s.substr(dot + 1);
        if (frac.size() > 18)
            throw std::invalid_argument("decimal has too many digits: '" + text + "'");
        std::int64_t w = whole.empty() ? 0 : parse_int(whole);
        std::int64_t f = frac.empty() ? 0 : parse_int(frac);
        if (f < 0) throw std::invalid_argument("malformed decimal: '" + text + "'");
        std::int64_t den = 1;
        for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
        magnitude = Rational(w) + Rational(f, den);
    } else {
        magnitude = Rational(parse_int(s));
    }
    return negative ? -magnitude : magnitude;
}

std::string format_rational(const Rational& r) {
    std::int64_t num = r.numerator();
    std::int64_t den = r.denominator();  // boost keeps den > 0
    if (den == 1) return std::to_string(num);

    // A fraction terminates in decimal iff the reduced denominator is 2^a 5^b.
    std::int64_t rest = den;
    int twos = 0, fives = 0;
    while (rest % 2 == 0) { rest /= 2; ++twos; }
    while (rest % 5 == 0) { rest /= 5; ++fives; }
    if (rest != 1) return std::to_string(num) + "/" + std::to_string(den);

    int digits = twos > fives ? twos : fives;
    unsigned __int128 mantissa = num < 0 ? -static_cast<__int128>(num) : num;
    for (int i = 0; i < digits - twos; ++i) mantissa *= 2;
    for (int i = 0; i < digits - fives; ++i) mantissa *= 5;

    std::string body;
    while (mantissa > 0) {
        body.push_back(static_cast<char>('0' + static_cast<int>(mantissa % 10)));
        mantissa /= 10;
    }
    while (static_cast<int>(body.size()) <= digits) body.push_back('0');
    std::string out;
    if (num < 0) out.push_back('-');
    for (int i = static_cast<int>(body.size()) - 1; i >= 0; --i) {
        out.push_back(body[i]);
        if (i == digits) out.push_back('.');
    }
    return out;
}

}  // namespace qopt
