#include "moprl/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace moprl {

Rational make_rational(long num, long den) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

bool looks_like_rational(std::string_view text) {
    // -?[0-9]+(/[1-9][0-9]*)?
    size_t i = 0;
    if (i < text.size() && text[i] == '-') ++i;
    size_t num_start = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i == num_start) return false;
    if (i == text.size()) return true;
    if (text[i] != '/') return false;
    ++i;
    if (i == text.size() || text[i] < '1' || text[i] > '9') return false;
    ++i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    return i == text.size();
}

Rational rational_from_string(std::string_view text) {
    if (!looks_like_rational(text)) {
        throw std::invalid_argument("invalid rational '" + std::string(text) + "'");
    }
    Rational q(std::string(text), 10);
    q.canonicalize();
    return q;
}

std::string to_string(const Rational& value) { return value.get_str(); }

namespace {

mpz_class pow10(unsigned long e) {
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), 10, e);
    return r;
}

}  // namespace

std::string decimal_string(const Rational& value, int significant_digits) {
    if (significant_digits < 1) throw std::invalid_argument("need at least one significant digit");
    if (value == 0) return "0";

    const bool negative = value < 0;
    mpz_class num = abs(value.get_num());
    mpz_class den = value.get_den();

    // Scale so the integer quotient carries a couple of guard digits beyond
    // what we keep, then round-half-up at the kept length.
    const size_t num_len = num.get_str().size();
    const size_t den_len = den.get_str().size();
    long shift = static_cast<long>(significant_digits) + 2 +
                 static_cast<long>(den_len) - static_cast<long>(num_len);
    if (shift < 0) shift = 0;
    mpz_class scaled = num * pow10(static_cast<unsigned long>(shift)) / den;

    std::string digits = scaled.get_str();
    long exponent = static_cast<long>(digits.size()) - 1 - shift;
    if (static_cast<long>(digits.size()) > significant_digits) {
        const size_t keep = static_cast<size_t>(significant_digits);
        mpz_class drop = pow10(digits.size() - keep);
        mpz_class rounded = (scaled + drop / 2) / drop;
        digits = rounded.get_str();
        if (static_cast<long>(digits.size()) > significant_digits) {
            // rounding carried into a new leading digit (e.g. 999.. -> 1000..)
            digits.pop_back();
            ++exponent;
        }
    }
    while (digits.size() > 1 && digits.back() == '0') digits.pop_back();

    std::string out;
    if (negative) out.push_back('-');
    if (exponent >= 0 && exponent < significant_digits) {
        const size_t int_len = static_cast<size_t>(exponent) + 1;
        if (digits.size() <= int_len) {
            out += digits;
            out.append(int_len - digits.size(), '0');
        } else {
            out += digits.substr(0, int_len);
            out.push_back('.');
            out += digits.substr(int_len);
        }
    } else if (exponent < 0 && exponent >= -4) {
        out += "0.";
        out.append(static_cast<size_t>(-exponent - 1), '0');
        out += digits;
    } else {
        out.push_back(digits[0]);
        if (digits.size() > 1) {
            out.push_back('.');
            out += digits.substr(1);
        }
        out.push_back('e');
        out += std::to_string(exponent);
    }
    return out;
}

}  // namespace moprl
