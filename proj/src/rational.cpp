#include "ptpoly/rational.hpp"

#include "ptpoly/errors.hpp"

#include <cctype>
#include <string>

namespace ptpoly {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

mpz_class pow10(long exponent) {
    mpz_class result;
    mpz_ui_pow_ui(result.get_mpz_t(), 10, static_cast<unsigned long>(exponent));
    return result;
}

Rational parse_decimal(std::string_view text, std::string_view original) {
    auto fail = [&] { throw Error(ErrorKind::parse_error, "bad number '" + std::string(original) + "'"); };

    bool negative = false;
    if (!text.empty() && (text.front() == '+' || text.front() == '-')) {
        negative = text.front() == '-';
        text.remove_prefix(1);
    }

    long exponent = 0;
    if (auto e = text.find_first_of("eE"); e != std::string_view::npos) {
        std::string_view exp_part = text.substr(e + 1);
        bool exp_negative = false;
        if (!exp_part.empty() && (exp_part.front() == '+' || exp_part.front() == '-')) {
            exp_negative = exp_part.front() == '-';
            exp_part.remove_prefix(1);
        }
        if (!all_digits(exp_part) || exp_part.size() > 6) fail();
        exponent = std::stol(std::string(exp_part));
        if (exp_negative) exponent = -exponent;
        text = text.substr(0, e);
    }

    std::string digits;
    if (auto dot = text.find('.'); dot != std::string_view::npos) {
        std::string_view whole = text.substr(0, dot);
        std::string_view frac = text.substr(dot + 1);
        if (whole.empty() && frac.empty()) fail();
        if (!whole.empty() && !all_digits(whole)) fail();
        if (!frac.empty() && !all_digits(frac)) fail();
        digits = std::string(whole) + std::string(frac);
        exponent -= static_cast<long>(frac.size());
    } else {
        if (!all_digits(text)) fail();
        digits = std::string(text);
    }

    Rational value(mpz_class(digits, 10));
    if (exponent > 0)
        value *= pow10(exponent);
    else if (exponent < 0)
        value /= pow10(-exponent);
    value.canonicalize();
    return negative ? Rational(-value) : value;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    const std::string_view original = text;
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
    if (text.empty()) throw Error(ErrorKind::parse_error, "empty number");

    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        Rational num = parse_decimal(text.substr(0, slash), original);
        Rational den = parse_decimal(text.substr(slash + 1), original);
        if (den == 0) throw Error(ErrorKind::parse_error, "zero denominator in '" + std::string(original) + "'");
        Rational value = num / den;
        value.canonicalize();
        return value;
    }
    return parse_decimal(text, original);
}

std::string to_string(const Rational& input) {
    Rational value = input;
    value.canonicalize();
    if (value.get_den() == 1) return value.get_num().get_str();
    return value.get_num().get_str() + "/" + value.get_den().get_str();
}

int sign_of_sum_with_sqrt(const Rational& a, const Rational& b, const Rational& d) {
    const int sa = sgn(a);
    const int sb = sgn(b) * (sgn(d) > 0 ? 1 : 0);
    if (sb == 0) return sa;
    if (sa == 0 || sa == sb) return sb;
    // Opposite signs: compare a^2 with b^2 d.
    const Rational lhs = a * a;
    const Rational rhs = b * b * d;
    const int c = cmp(lhs, rhs);
    if (c == 0) return 0;
    return c > 0 ? sa : sb;
}

}  // namespace ptpoly
