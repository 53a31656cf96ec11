#include "scoregate/rational.hpp"

#include <cctype>

namespace scoregate {

Rational parse_decimal(const std::string& text) {
    std::size_t i = 0;
    bool negative = false;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
        negative = text[i] == '-';
        ++i;
    }
    Integer mantissa = 0;
    int frac_digits = 0;
    bool any_digit = false;
    bool seen_point = false;
    for (; i < text.size(); ++i) {
        char c = text[i];
        if (c == '.') {
            if (seen_point) throw std::invalid_argument("malformed decimal: " + text);
            seen_point = true;
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            mantissa = mantissa * 10 + (c - '0');
            if (seen_point) ++frac_digits;
            any_digit = true;
        } else {
            throw std::invalid_argument("malformed decimal: " + text);
        }
    }
    if (!any_digit) throw std::invalid_argument("malformed decimal: " + text);
    Rational value(mantissa, pow10(frac_digits));
    return negative ? -value : value;
}

std::string to_decimal_string(const Rational& value, int digits) {
    if (digits < 0) throw std::invalid_argument("negative digit count");
    const bool negative = value < 0;
    const Rational mag = negative ? Rational(-value) : value;
    // scaled = round(mag * 10^digits), ties away from zero
    const Integer den = denominator(mag);
    Integer scaled_num = numerator(mag) * pow10(digits);
    Integer q = scaled_num / den;
    Integer r = scaled_num % den;
    if (2 * r >= den) ++q;
    Integer whole = q / pow10(digits);
    Integer frac = q % pow10(digits);
    std::string out = negative && q != 0 ? "-" : "";
    out += whole.str();
    if (digits > 0) {
        std::string f = frac.str();
        out += "." + std::string(digits - f.size(), '0') + f;
    }
    return out;
}

}  // namespace scoregate
