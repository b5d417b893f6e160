#include "vallab/rational.hpp"

#include <cctype>
#include <ostream>

namespace vallab {

const char* errc_name(errc c) {
    switch (c) {
    case errc::invalid_argument: return "invalid_argument";
    case errc::parse_error: return "parse_error";
    case errc::zero_polynomial: return "zero_polynomial";
    case errc::zero_function: return "zero_function";
    case errc::division_by_zero: return "division_by_zero";
    case errc::not_certified: return "not_certified";
    case errc::depth_exceeded: return "depth_exceeded";
    case errc::precision_exhausted: return "precision_exhausted";
    case errc::budget_exceeded: return "budget_exceeded";
    case errc::same_point: return "same_point";
    case errc::different_prime: return "different_prime";
    case errc::not_in_domain_at_center: return "not_in_domain_at_center";
    case errc::divisibility_violation: return "divisibility_violation";
    case errc::construction_failed: return "construction_failed";
    case errc::dedekind_failed: return "dedekind_failed";
    }
    return "unknown";
}

Rational::Rational(const Integer& num, const Integer& den) {
    if (sgn(den) == 0) fail(errc::division_by_zero, "rational with zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
}

Rational Rational::parse(const std::string& text) {
    if (text.empty()) fail(errc::parse_error, "empty rational literal");
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return Rational(Integer(text));
        Integer num(text.substr(0, slash));
        Integer den(text.substr(slash + 1));
        if (sgn(den) == 0) fail(errc::parse_error, "zero denominator in '" + text + "'");
        return Rational(num, den);
    } catch (const std::invalid_argument&) {
        fail(errc::parse_error, "bad rational literal '" + text + "'");
    }
}

Rational Rational::operator-() const {
    Rational r;
    r.q_ = -q_;
    return r;
}

Rational Rational::operator+(const Rational& o) const {
    Rational r;
    r.q_ = q_ + o.q_;
    return r;
}

Rational Rational::operator-(const Rational& o) const {
    Rational r;
    r.q_ = q_ - o.q_;
    return r;
}

Rational Rational::operator*(const Rational& o) const {
    Rational r;
    r.q_ = q_ * o.q_;
    return r;
}

Rational Rational::operator/(const Rational& o) const {
    if (o.is_zero()) fail(errc::division_by_zero, "rational division by zero");
    Rational r;
    r.q_ = q_ / o.q_;
    return r;
}

Rational Rational::abs() const {
    Rational r;
    r.q_ = ::abs(q_);
    return r;
}

Integer Rational::floor() const {
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
    return q;
}

Integer Rational::ceil() const {
    Integer q;
    mpz_cdiv_q(q.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
    return q;
}

Rational Rational::pow(long e) const {
    if (e == 0) return Rational(1);
    if (is_zero()) {
        if (e < 0) fail(errc::division_by_zero, "0^negative");
        return Rational(0);
    }
    unsigned long k = static_cast<unsigned long>(e < 0 ? -e : e);
    Integer n = vallab::pow(num(), k);
    Integer d = vallab::pow(den(), k);
    return e > 0 ? Rational(n, d) : Rational(d, n);
}

std::string Rational::str() const {
    if (is_integer()) return num().get_str();
    return num().get_str() + "/" + den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Rational gcd(const Rational& a, const Rational& b) {
    // gcd on Q: gcd of numerators over lcm of denominators; gcd(0,0) = 0.
    if (a.is_zero()) return b.abs();
    if (b.is_zero()) return a.abs();
    return Rational(gcd(a.num(), b.num()), lcm(a.den(), b.den()));
}

Integer gcd(const Integer& a, const Integer& b) {
    Integer g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

Integer lcm(const Integer& a, const Integer& b) {
    Integer l;
    mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return l;
}

Integer pow(const Integer& base, unsigned long e) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

} // namespace vallab
