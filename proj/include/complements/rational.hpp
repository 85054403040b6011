#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace complements {

using Integer = mpz_class;

/// Exact rational number in lowest terms with a positive denominator.
///
/// Thin value type over GMP's mpq_class. Every coefficient, discrepancy and
/// threshold in the library is a Rational; no floating point is involved.
class Rational {
public:
    Rational() = default;
    Rational(long value) : q_(value) {}
    Rational(int value) : q_(static_cast<long>(value)) {}
    explicit Rational(const Integer& value) : q_(value) {}
    Rational(const Integer& num, const Integer& den);
    Rational(long num, long den);

    /// Accepts "p", "-p", "p/q" and "-p/q" with decimal digits only.
    static Rational parse(std::string_view text);

    const Integer& numerator() const { return q_.get_num(); }
    const Integer& denominator() const { return q_.get_den(); }

    bool is_integer() const { return q_.get_den() == 1; }
    int sign() const { return sgn(q_); }

    Integer floor() const;
    Integer ceil() const;

    /// "p" for integers, "p/q" otherwise.
    std::string to_string() const;

    Rational operator-() const { return from_mpq(-q_); }
    Rational& operator+=(const Rational& rhs) { q_ += rhs.q_; return *this; }
    Rational& operator-=(const Rational& rhs) { q_ -= rhs.q_; return *this; }
    Rational& operator*=(const Rational& rhs) { q_ *= rhs.q_; return *this; }
    Rational& operator/=(const Rational& rhs);

    friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
    friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
    friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
    friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        int c = cmp(a.q_, b.q_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

    const mpq_class& raw() const { return q_; }

private:
    static Rational from_mpq(mpq_class q) {
        Rational r;
        r.q_ = std::move(q);
        return r;
    }

    mpq_class q_{0};
};

std::ostream& operator<<(std::ostream& os, const Rational& q);

Rational abs(const Rational& q);

}  // namespace complements
