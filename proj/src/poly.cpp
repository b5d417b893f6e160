#include "vallab/poly.hpp"

#include <ostream>
#include <sstream>

namespace vallab {

Poly Poly::monomial(long deg, const Rational& coeff) {
    if (coeff.is_zero() || deg < 0) return Poly();
    std::vector<Rational> c(static_cast<size_t>(deg) + 1, Rational(0));
    c.back() = coeff;
    return Poly(std::move(c));
}

const Rational& Poly::leading() const {
    if (c_.empty()) fail(errc::zero_polynomial, "zero polynomial has no leading coefficient");
    return c_.back();
}

Poly Poly::operator-() const {
    Poly r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

Poly Poly::operator+(const Poly& o) const {
    std::vector<Rational> c(std::max(c_.size(), o.c_.size()), Rational(0));
    for (size_t i = 0; i < c_.size(); ++i) c[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) c[i] += o.c_[i];
    return Poly(std::move(c));
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
    if (is_zero() || o.is_zero()) return Poly();
    std::vector<Rational> c(c_.size() + o.c_.size() - 1, Rational(0));
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < o.c_.size(); ++j) c[i + j] += c_[i] * o.c_[j];
    return Poly(std::move(c));
}

Poly Poly::operator*(const Rational& s) const {
    if (s.is_zero()) return Poly();
    Poly r = *this;
    for (auto& c : r.c_) c *= s;
    return r;
}

std::pair<Poly, Poly> Poly::divrem(const Poly& d) const {
    if (d.is_zero()) fail(errc::division_by_zero, "polynomial division by zero");
    Poly q, r = *this;
    while (!r.is_zero() && r.degree() >= d.degree()) {
        long k = r.degree() - d.degree();
        Rational c = r.leading() / d.leading();
        Poly t = Poly::monomial(k, c);
        q += t;
        r -= t * d;
    }
    return {q, r};
}

Poly Poly::div_exact(const Poly& d) const {
    auto [q, r] = divrem(d);
    if (!r.is_zero()) fail(errc::invalid_argument, "inexact polynomial division");
    return q;
}

bool Poly::divides(const Poly& multiple) const {
    if (is_zero()) return multiple.is_zero();
    return multiple.divrem(*this).second.is_zero();
}

Rational Poly::operator()(const Rational& x) const {
    Rational acc(0);
    for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
}

Poly Poly::derivative() const {
    if (c_.size() <= 1) return Poly();
    std::vector<Rational> c(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) c[i - 1] = c_[i] * Rational(static_cast<long>(i));
    return Poly(std::move(c));
}

Poly Poly::shift(const Rational& c) const {
    // Horner: p(X + c) accumulated from the leading coefficient down.
    Poly shifted_x = Poly({c, Rational(1)});
    Poly acc;
    for (size_t i = c_.size(); i-- > 0;) acc = acc * shifted_x + Poly(c_[i]);
    return acc;
}

Poly Poly::reverse() const {
    std::vector<Rational> c(c_.rbegin(), c_.rend());
    return Poly(std::move(c));
}

Poly Poly::scale_arg(const Rational& s) const {
    if (s.is_zero()) fail(errc::invalid_argument, "argument scale must be nonzero");
    Poly r = *this;
    Rational sk(1);
    for (size_t i = 0; i < r.c_.size(); ++i) {
        r.c_[i] *= sk;
        sk *= s;
    }
    r.trim();
    return r;
}

Poly Poly::pow(long e) const {
    if (e < 0) fail(errc::invalid_argument, "negative polynomial power");
    Poly r(Rational(1));
    Poly b = *this;
    while (e > 0) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

Poly Poly::monic() const {
    if (is_zero()) fail(errc::zero_polynomial, "cannot normalize the zero polynomial");
    return *this * (Rational(1) / leading());
}

long Poly::order_at_zero() const {
    for (size_t i = 0; i < c_.size(); ++i)
        if (!c_[i].is_zero()) return static_cast<long>(i);
    return 0;
}

std::string Poly::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (long i = degree(); i >= 0; --i) {
        const Rational& c = coeff(i);
        if (c.is_zero()) continue;
        Rational a = c.abs();
        if (first) {
            if (c.sign() < 0) os << "-";
            first = false;
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        bool unit = (a == Rational(1));
        if (i == 0) {
            os << a.str();
        } else {
            if (!unit) os << a.str() << "*";
            os << "X";
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.str(); }

Poly gcd(const Poly& a, const Poly& b) {
    Poly f = a, g = b;
    while (!g.is_zero()) {
        Poly r = f.divrem(g).second;
        f = g;
        g = r;
    }
    return f.is_zero() ? f : f.monic();
}

Rational content(const Poly& f) {
    Rational c(0);
    for (const auto& a : f.coeffs()) c = gcd(c, a);
    return c;
}

std::pair<std::vector<Integer>, Integer> clear_denominators(const Poly& f) {
    Integer m(1);
    for (const auto& c : f.coeffs()) m = lcm(m, c.den());
    std::vector<Integer> out;
    out.reserve(f.coeffs().size());
    for (const auto& c : f.coeffs()) out.push_back(c.num() * (m / c.den()));
    return {out, m};
}

} // namespace vallab
