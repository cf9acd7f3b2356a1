#include "dioph/rational.hpp"

#include <cctype>
#include <cmath>
#include <string>

#include "dioph/errors.hpp"

namespace dioph {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

Integer parse_integer(std::string_view s, std::string_view whole) {
    bool negative = false;
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    if (!all_digits(s)) throw ParseError("invalid rational literal '" + std::string(whole) + "'");
    Integer z(std::string(s), 10);
    return negative ? Integer(-z) : z;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
    const std::string_view whole = text;
    if (text.empty()) throw ParseError("empty rational literal");

    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        Integer num = parse_integer(text.substr(0, slash), whole);
        Integer den = parse_integer(text.substr(slash + 1), whole);
        if (den == 0) throw ParseError("zero denominator in '" + std::string(whole) + "'");
        Rational r(num, den);
        r.canonicalize();
        return r;
    }

    // Decimal with optional exponent, converted exactly.
    std::string_view mantissa = text;
    long exponent = 0;
    if (auto e = text.find_first_of("eE"); e != std::string_view::npos) {
        mantissa = text.substr(0, e);
        exponent = parse_integer(text.substr(e + 1), whole).get_si();
    }
    bool negative = false;
    if (!mantissa.empty() && (mantissa.front() == '-' || mantissa.front() == '+')) {
        negative = mantissa.front() == '-';
        mantissa.remove_prefix(1);
    }
    std::string digits;
    if (auto dot = mantissa.find('.'); dot != std::string_view::npos) {
        std::string_view ip = mantissa.substr(0, dot);
        std::string_view fp = mantissa.substr(dot + 1);
        if ((!ip.empty() && !all_digits(ip)) || (!fp.empty() && !all_digits(fp)) || (ip.empty() && fp.empty()))
            throw ParseError("invalid rational literal '" + std::string(whole) + "'");
        digits = std::string(ip) + std::string(fp);
        exponent -= static_cast<long>(fp.size());
    } else {
        if (!all_digits(mantissa)) throw ParseError("invalid rational literal '" + std::string(whole) + "'");
        digits = std::string(mantissa);
    }
    Rational r(Integer(digits, 10));
    Integer ten_pow;
    mpz_ui_pow_ui(ten_pow.get_mpz_t(), 10, static_cast<unsigned long>(exponent < 0 ? -exponent : exponent));
    if (exponent >= 0)
        r *= ten_pow;
    else
        r /= ten_pow;
    r.canonicalize();
    return negative ? Rational(-r) : r;
}

std::string to_string(const Rational& x) { return x.get_str(10); }

double log_of(const Integer& x) {
    if (x <= 0) throw PreconditionViolated("log of a nonpositive integer");
    long exp2 = 0;
    const double mant = mpz_get_d_2exp(&exp2, x.get_mpz_t());
    return std::log(mant) + static_cast<double>(exp2) * std::log(2.0);
}

double log_of(const Rational& x) {
    if (x <= 0) throw PreconditionViolated("log of a nonpositive rational " + to_string(x));
    return log_of(Integer(x.get_num())) - log_of(Integer(x.get_den()));
}

double log_plus(const Rational& x) { return x > 1 ? log_of(x) : 0.0; }

Rational pow(const Rational& x, long e) {
    if (e < 0) {
        if (x == 0) throw PreconditionViolated("negative power of zero");
        return pow(Rational(1) / x, -e);
    }
    Integer num, den;
    mpz_pow_ui(num.get_mpz_t(), x.get_num_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(den.get_mpz_t(), x.get_den_mpz_t(), static_cast<unsigned long>(e));
    Rational r(num, den);
    r.canonicalize();
    return r;
}

}  // namespace dioph
