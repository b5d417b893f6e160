#pragma once

#include <gmpxx.h>

#include <compare>
#include <iosfwd>
#include <string>

#include "vallab/errors.hpp"

namespace vallab {

using Integer = mpz_class;

/// Arbitrary-precision rational, always in lowest terms with positive
/// denominator. All arithmetic is exact; nothing in the library ever rounds.
class Rational {
  public:
    Rational() : q_(0) {}
    Rational(long n) : q_(n) {}
    Rational(const Integer& n) : q_(n) {}
    Rational(const Integer& num, const Integer& den);
    Rational(long num, long den) : Rational(Integer(num), Integer(den)) {}

    /// Parses "a/b" or an integer literal (optional sign, no whitespace).
    static Rational parse(const std::string& text);

    Integer num() const { return q_.get_num(); }
    Integer den() const { return q_.get_den(); }

    bool is_zero() const { return sgn(q_) == 0; }
    bool is_integer() const { return q_.get_den() == 1; }
    int sign() const { return sgn(q_); }

    Rational operator-() const;
    Rational operator+(const Rational& o) const;
    Rational operator-(const Rational& o) const;
    Rational operator*(const Rational& o) const;
    Rational operator/(const Rational& o) const; // throws division_by_zero

    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    bool operator==(const Rational& o) const { return q_ == o.q_; }
    std::strong_ordering operator<=>(const Rational& o) const {
        int c = cmp(q_, o.q_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    Rational abs() const;
    Integer floor() const;
    Integer ceil() const;

    /// Integer power; e < 0 requires a nonzero base.
    Rational pow(long e) const;

    std::string str() const;

  private:
    mpq_class q_; // invariant: canonical (mpq operations preserve this)
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

Rational gcd(const Rational& a, const Rational& b);
Integer gcd(const Integer& a, const Integer& b);
Integer lcm(const Integer& a, const Integer& b);
Integer pow(const Integer& base, unsigned long e);

} // namespace vallab
