#include "maxvec/rational.hpp"

#include <cctype>
#include <ostream>

#include "maxvec/errors.hpp"

namespace maxvec {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

// Removes every factor `f` from `n`, returning how many were removed.
unsigned long remove_factor(mpz_class& n, unsigned long f) {
    mpz_class reduced;
    unsigned long count = mpz_remove(reduced.get_mpz_t(), n.get_mpz_t(), mpz_class(f).get_mpz_t());
    n = reduced;
    return count;
}

}  // namespace

Rational::Rational(long numerator, long denominator) {
    if (denominator == 0) {
        throw DomainError("rational denominator must be nonzero");
    }
    value_ = mpq_class(numerator, denominator);
    value_.canonicalize();
}

Rational Rational::from_string(std::string_view text) {
    std::string_view rest = text;
    bool negative = false;
    if (!rest.empty() && (rest.front() == '+' || rest.front() == '-')) {
        negative = rest.front() == '-';
        rest.remove_prefix(1);
    }
    if (rest.empty()) {
        throw ParseError("empty number: '" + std::string(text) + "'");
    }

    mpq_class value;
    if (auto slash = rest.find('/'); slash != std::string_view::npos) {
        std::string_view num = rest.substr(0, slash);
        std::string_view den = rest.substr(slash + 1);
        if (!all_digits(num) || !all_digits(den)) {
            throw ParseError("malformed fraction: '" + std::string(text) + "'");
        }
        mpz_class d(std::string(den), 10);
        if (d == 0) {
            throw ParseError("zero denominator: '" + std::string(text) + "'");
        }
        value = mpq_class(mpz_class(std::string(num), 10), d);
        value.canonicalize();
    } else {
        std::string_view int_part = rest;
        std::string_view frac_part;
        if (auto dot = rest.find('.'); dot != std::string_view::npos) {
            int_part = rest.substr(0, dot);
            frac_part = rest.substr(dot + 1);
            if (frac_part.empty()) {
                throw ParseError("missing digits after decimal point: '" + std::string(text) + "'");
            }
        }
        if (!all_digits(int_part)) {
            throw ParseError("malformed number: '" + std::string(text) + "'");
        }
        if (!frac_part.empty() && !all_digits(frac_part)) {
            throw ParseError("malformed number: '" + std::string(text) + "'");
        }
        mpz_class scaled(std::string(int_part) + std::string(frac_part), 10);
        mpz_class den;
        mpz_ui_pow_ui(den.get_mpz_t(), 10, frac_part.size());
        value = mpq_class(scaled, den);
        value.canonicalize();
    }

    if (negative) value = -value;
    Rational out;
    out.value_ = value;
    return out;
}

std::string Rational::to_string() const {
    const mpz_class& num = value_.get_num();
    const mpz_class& den = value_.get_den();
    if (den == 1) {
        return num.get_str();
    }

    mpz_class reduced = den;
    unsigned long twos = remove_factor(reduced, 2);
    unsigned long fives = remove_factor(reduced, 5);
    if (reduced != 1) {
        return num.get_str() + "/" + den.get_str();
    }

    // den = 2^a * 5^b, so the value has an exact decimal expansion with
    // max(a, b) fractional digits (and no trailing zeros, being in
    // lowest terms).
    unsigned long digits = std::max(twos, fives);
    mpz_class pow10;
    mpz_ui_pow_ui(pow10.get_mpz_t(), 10, digits);
    mpz_class scaled = abs(num) * pow10;
    mpz_divexact(scaled.get_mpz_t(), scaled.get_mpz_t(), den.get_mpz_t());

    std::string s = scaled.get_str();
    if (s.size() <= digits) {
        s.insert(0, digits + 1 - s.size(), '0');
    }
    s.insert(s.size() - digits, ".");
    if (sgn(num) < 0) s.insert(0, "-");
    return s;
}

Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) {
        throw DomainError("division by zero");
    }
    return Rational(mpq_class(a.value_ / b.value_));
}

Rational midpoint(const Rational& a, const Rational& b) {
    return (a + b) / Rational(2);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.to_string();
}

}  // namespace maxvec
