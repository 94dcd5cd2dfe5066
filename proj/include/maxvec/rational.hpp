/**
 * @file rational.hpp
 * @brief Exact arbitrary-precision rational numbers.
 *
 * All coordinate values in this library are exact rationals. Equality of
 * single coordinates is meaningful (ties decide between dominance and
 * strong dominance), so floating point is never used.
 */

#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace maxvec {

/**
 * @brief An exact rational number backed by GMP.
 *
 * Invariants: the denominator is positive and the fraction is stored in
 * lowest terms. The total order agrees with the order on the reals.
 */
class Rational {
public:
    Rational() : value_(0) {}
    Rational(long numerator) : value_(numerator) {}  // NOLINT(google-explicit-constructor)
    Rational(int numerator) : value_(numerator) {}   // NOLINT(google-explicit-constructor)

    /// Builds numerator/denominator in lowest terms. Throws DomainError on
    /// a zero denominator.
    Rational(long numerator, long denominator);

    /**
     * @brief Parses an exact decimal string such as "3", "-0.25" or "2.5",
     *        or a fraction such as "5/2".
     *
     * Throws ParseError on malformed input.
     */
    static Rational from_string(std::string_view text);

    /**
     * @brief Renders the exact value.
     *
     * Values with a denominator of the form 2^a * 5^b print as the shortest
     * exact decimal ("2.5", "-0.125", "7"); anything else falls back to
     * "num/den". from_string(to_string(x)) == x for every x.
     */
    std::string to_string() const;

    bool is_zero() const { return sgn(value_) == 0; }
    bool is_positive() const { return sgn(value_) > 0; }
    bool is_negative() const { return sgn(value_) < 0; }

    /// True when the value is an integer representable as long (enables
    /// exact machine-word comparisons on hot paths).
    bool is_machine_int() const {
        return value_.get_den() == 1 && value_.get_num().fits_slong_p();
    }
    long machine_int() const { return value_.get_num().get_si(); }

    std::string numerator_string() const { return value_.get_num().get_str(); }
    std::string denominator_string() const { return value_.get_den().get_str(); }

    friend Rational operator+(const Rational& a, const Rational& b) { return Rational(mpq_class(a.value_ + b.value_)); }
    friend Rational operator-(const Rational& a, const Rational& b) { return Rational(mpq_class(a.value_ - b.value_)); }
    friend Rational operator*(const Rational& a, const Rational& b) { return Rational(mpq_class(a.value_ * b.value_)); }
    friend Rational operator/(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.value_)); }

    Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
    Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }

    friend bool operator==(const Rational& a, const Rational& b) { return mpq_equal(a.value_.get_mpq_t(), b.value_.get_mpq_t()) != 0; }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) { return cmp(a.value_, b.value_) < 0; }
    friend bool operator<=(const Rational& a, const Rational& b) { return cmp(a.value_, b.value_) <= 0; }
    friend bool operator>(const Rational& a, const Rational& b) { return cmp(a.value_, b.value_) > 0; }
    friend bool operator>=(const Rational& a, const Rational& b) { return cmp(a.value_, b.value_) >= 0; }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r);

private:
    // Used for arithmetic results, which GMP already keeps canonical.
    explicit Rational(mpq_class value) : value_(std::move(value)) {}

    mpq_class value_;
};

/// Midpoint of two rationals, (a + b) / 2.
Rational midpoint(const Rational& a, const Rational& b);

}  // namespace maxvec
