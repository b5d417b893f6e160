#pragma once

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "vallab/rational.hpp"

namespace vallab {

/// Dense univariate polynomial over Q, constant term first. The leading
/// coefficient is nonzero unless the polynomial is zero; degree() is -1
/// for the zero polynomial.
class Poly {
  public:
    Poly() = default;
    Poly(const Rational& c) { // constant
        if (!c.is_zero()) c_.push_back(c);
    }
    Poly(long c) : Poly(Rational(c)) {}
    explicit Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }
    Poly(std::initializer_list<Rational> coeffs) : c_(coeffs) { trim(); }

    static Poly X() { return Poly({Rational(0), Rational(1)}); }
    static Poly monomial(long deg, const Rational& coeff);

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    bool is_monic() const { return !c_.empty() && c_.back() == Rational(1); }

    /// Coefficient of X^i (zero beyond the degree).
    const Rational& coeff(long i) const {
        static const Rational kZero(0);
        return (i >= 0 && i < static_cast<long>(c_.size())) ? c_[static_cast<size_t>(i)] : kZero;
    }
    const Rational& leading() const;
    const std::vector<Rational>& coeffs() const { return c_; }

    Poly operator-() const;
    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly operator*(const Rational& s) const;
    bool operator==(const Poly& o) const { return c_ == o.c_; }

    Poly& operator+=(const Poly& o) { return *this = *this + o; }
    Poly& operator-=(const Poly& o) { return *this = *this - o; }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    /// Quotient and remainder; the divisor must be nonzero.
    std::pair<Poly, Poly> divrem(const Poly& d) const;
    /// Exact quotient; throws invalid_argument if the division leaves a remainder.
    Poly div_exact(const Poly& d) const;
    bool divides(const Poly& multiple) const;

    Rational operator()(const Rational& x) const; // evaluation
    Poly derivative() const;
    /// p(X + c): Taylor shift by a rational constant.
    Poly shift(const Rational& c) const;
    /// X^deg * p(1/X): coefficients reversed.
    Poly reverse() const;
    /// p(s*X) for a nonzero rational scale s.
    Poly scale_arg(const Rational& s) const;
    Poly pow(long e) const;
    Poly monic() const; // throws on zero

    /// Multiplicity of X (order of vanishing at 0); degree+1-ish sentinel not
    /// used: returns 0 for the zero polynomial.
    long order_at_zero() const;

    std::string str() const;

  private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
    std::vector<Rational> c_;
};

std::ostream& operator<<(std::ostream& os, const Poly& p);

/// Monic gcd over Q (monic zero-safe: gcd(f, 0) = monic f).
Poly gcd(const Poly& a, const Poly& b);

/// Positive rational c such that f/c has coprime integer coefficients.
Rational content(const Poly& f);

/// f scaled to integer coefficients: returns (F, m) with F = f*m integral
/// and m a positive integer (the lcm of coefficient denominators).
std::pair<std::vector<Integer>, Integer> clear_denominators(const Poly& f);

} // namespace vallab
