#include "deadbeat/rational.hpp"

#include "deadbeat/errors.hpp"

#include <cctype>
#include <cstddef>

namespace deadbeat {

namespace {

bool is_integer_token(std::string_view s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '+' || s[0] == '-') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    }
    return true;
}

mpz_class parse_integer(std::string_view s, std::string_view whole) {
    if (!is_integer_token(s)) {
        raise(errc::parse_error, "not a rational literal: '" + std::string(whole) + "'");
    }
    return mpz_class(std::string(s), 10);
}

}  // namespace

Rational rat(long num, long den) {
    if (den == 0) raise(errc::parse_error, "zero denominator");
    Rational value(num, den);
    value.canonicalize();
    return value;
}

Rational parse_rational(std::string_view text) {
    std::string_view s = text;
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    if (s.empty()) raise(errc::parse_error, "empty rational literal");

    if (auto slash = s.find('/'); slash != std::string_view::npos) {
        const mpz_class num = parse_integer(s.substr(0, slash), text);
        const mpz_class den = parse_integer(s.substr(slash + 1), text);
        if (den == 0) raise(errc::parse_error, "zero denominator in '" + std::string(text) + "'");
        Rational value(num, den);
        value.canonicalize();
        return value;
    }

    if (auto dot = s.find('.'); dot != std::string_view::npos) {
        std::string_view head = s.substr(0, dot);
        std::string_view tail = s.substr(dot + 1);
        bool negative = false;
        if (!head.empty() && (head[0] == '+' || head[0] == '-')) {
            negative = head[0] == '-';
            head.remove_prefix(1);
        }
        if (head.empty() && tail.empty()) raise(errc::parse_error, "bare '.' in '" + std::string(text) + "'");
        std::string digits;
        digits.reserve(head.size() + tail.size());
        for (std::string_view part : {head, tail}) {
            for (char ch : part) {
                if (!std::isdigit(static_cast<unsigned char>(ch))) {
                    raise(errc::parse_error, "not a rational literal: '" + std::string(text) + "'");
                }
                digits.push_back(ch);
            }
        }
        mpz_class num(digits.empty() ? "0" : digits, 10);
        if (negative) num = -num;
        mpz_class den;
        mpz_ui_pow_ui(den.get_mpz_t(), 10, tail.size());
        Rational value(num, den);
        value.canonicalize();
        return value;
    }

    return Rational(parse_integer(s, text));
}

std::string format_rational(const Rational& value) { return value.get_str(); }

double to_double(const Rational& value) { return value.get_d(); }

}  // namespace deadbeat
