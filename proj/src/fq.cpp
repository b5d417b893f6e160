#include "vallab/fq.hpp"

namespace vallab {

namespace {

long mod_pos(long a, long p) {
    long r = a % p;
    return r < 0 ? r + p : r;
}

long mod_inverse(long a, long p) {
    long t = 0, nt = 1, r = p, nr = mod_pos(a, p);
    while (nr != 0) {
        long q = r / nr;
        std::swap(t -= q * nt, nt);
        std::swap(r -= q * nr, nr);
    }
    if (r != 1) fail(errc::division_by_zero, "no inverse mod p");
    return mod_pos(t, p);
}

std::vector<long> prime_divisors(long n) {
    std::vector<long> out;
    for (long q = 2; q * q <= n; ++q)
        if (n % q == 0) {
            out.push_back(q);
            while (n % q == 0) n /= q;
        }
    if (n > 1) out.push_back(n);
    return out;
}

long checked_pow(long p, int d, long cap) {
    long r = 1;
    for (int i = 0; i < d; ++i) {
        r *= p;
        if (r > cap) fail(errc::budget_exceeded, "finite-field enumeration too large");
    }
    return r;
}

} // namespace

FpPoly::FpPoly(long p, std::vector<long> coeffs) : p_(p), c_(std::move(coeffs)) {
    if (p < 2) fail(errc::invalid_argument, "modulus must be >= 2");
    for (auto& x : c_) x = mod_pos(x, p_);
    trim();
}

FpPoly FpPoly::from_poly(const Poly& f, long p) {
    std::vector<long> c;
    c.reserve(f.coeffs().size());
    Integer P(p);
    for (const auto& a : f.coeffs()) {
        Integer d = a.den();
        if (mpz_divisible_p(d.get_mpz_t(), P.get_mpz_t()))
            fail(errc::invalid_argument, "coefficient not p-integral");
        long num = static_cast<long>(mpz_fdiv_ui(a.num().get_mpz_t(), static_cast<unsigned long>(p)));
        long den = static_cast<long>(mpz_fdiv_ui(d.get_mpz_t(), static_cast<unsigned long>(p)));
        c.push_back(mod_pos(num * mod_inverse(den, p), p));
    }
    return FpPoly(p, std::move(c));
}

FpPoly FpPoly::nth_monic(long p, int d, long k) {
    std::vector<long> c(static_cast<size_t>(d) + 1, 0);
    for (int i = 0; i < d && k > 0; ++i) {
        c[static_cast<size_t>(i)] = k % p;
        k /= p;
    }
    c.back() = 1;
    return FpPoly(p, std::move(c));
}

FpPoly FpPoly::operator+(const FpPoly& o) const {
    std::vector<long> c(std::max(c_.size(), o.c_.size()), 0);
    for (size_t i = 0; i < c_.size(); ++i) c[i] = c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) c[i] = mod_pos(c[i] + o.c_[i], p_);
    return FpPoly(p_, std::move(c));
}

FpPoly FpPoly::operator-(const FpPoly& o) const {
    std::vector<long> c(std::max(c_.size(), o.c_.size()), 0);
    for (size_t i = 0; i < c_.size(); ++i) c[i] = c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) c[i] = mod_pos(c[i] - o.c_[i], p_);
    return FpPoly(p_, std::move(c));
}

FpPoly FpPoly::operator*(const FpPoly& o) const {
    if (is_zero() || o.is_zero()) return FpPoly(p_);
    std::vector<long> c(c_.size() + o.c_.size() - 1, 0);
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < o.c_.size(); ++j)
            c[i + j] = mod_pos(c[i + j] + c_[i] * o.c_[j], p_);
    return FpPoly(p_, std::move(c));
}

std::pair<FpPoly, FpPoly> FpPoly::divrem(const FpPoly& d) const {
    if (d.is_zero()) fail(errc::division_by_zero, "FpPoly division by zero");
    FpPoly q(p_), r = *this;
    long inv_lc = mod_inverse(d.c_.back(), p_);
    while (!r.is_zero() && r.degree() >= d.degree()) {
        long k = r.degree() - d.degree();
        long c = mod_pos(r.c_.back() * inv_lc, p_);
        std::vector<long> t(static_cast<size_t>(k) + 1, 0);
        t.back() = c;
        FpPoly m(p_, std::move(t));
        q = q + m;
        r = r - m * d;
    }
    return {q, r};
}

FpPoly FpPoly::monic() const {
    if (is_zero()) fail(errc::zero_polynomial, "cannot normalize zero");
    long inv_lc = mod_inverse(c_.back(), p_);
    std::vector<long> c = c_;
    for (auto& x : c) x = mod_pos(x * inv_lc, p_);
    return FpPoly(p_, std::move(c));
}

FpPoly FpPoly::derivative() const {
    if (c_.size() <= 1) return FpPoly(p_);
    std::vector<long> c(c_.size() - 1, 0);
    for (size_t i = 1; i < c_.size(); ++i) c[i - 1] = mod_pos(c_[i] * static_cast<long>(i % static_cast<size_t>(p_)), p_);
    return FpPoly(p_, std::move(c));
}

long FpPoly::eval(long x) const {
    long acc = 0;
    x = mod_pos(x, p_);
    for (size_t i = c_.size(); i-- > 0;) acc = mod_pos(acc * x + c_[i], p_);
    return acc;
}

FpPoly FpPoly::pow_mod(long e, const FpPoly& mod) const {
    FpPoly base = divrem(mod).second;
    FpPoly r = FpPoly::constant(p_, 1);
    while (e > 0) {
        if (e & 1) r = (r * base).divrem(mod).second;
        base = (base * base).divrem(mod).second;
        e >>= 1;
    }
    return r;
}

FpPoly FpPoly::frobenius_pow(long k, const FpPoly& mod) const {
    FpPoly h = divrem(mod).second;
    for (long i = 0; i < k; ++i) h = h.pow_mod(p_, mod);
    return h;
}

bool FpPoly::irreducible() const {
    int d = degree();
    if (d <= 0) return false;
    if (d == 1) return true;
    FpPoly x = FpPoly::x(p_);
    if (!(x.frobenius_pow(d, *this) == x.divrem(*this).second)) return false;
    for (long r : prime_divisors(d)) {
        FpPoly g = gcd(x.frobenius_pow(d / r, *this) - x, *this);
        if (!(g.degree() == 0)) return false;
    }
    return true;
}

std::vector<std::pair<FpPoly, int>> FpPoly::factor() const {
    if (is_zero()) fail(errc::zero_polynomial, "cannot factor zero");
    std::vector<std::pair<FpPoly, int>> out;
    FpPoly cur = monic();
    for (int d = 1; 2 * d <= cur.degree(); ++d) {
        long count = checked_pow(p_, d, 2'000'000);
        for (long k = 0; k < count && 2 * d <= cur.degree(); ++k) {
            FpPoly cand = nth_monic(p_, d, k);
            int mult = 0;
            for (;;) {
                auto [q, r] = cur.divrem(cand);
                if (!r.is_zero()) break;
                cur = q;
                ++mult;
            }
            if (mult > 0) out.emplace_back(cand, mult);
        }
    }
    if (cur.degree() > 0) out.emplace_back(cur, 1);
    return out;
}

Poly FpPoly::lift() const {
    std::vector<Rational> c;
    c.reserve(c_.size());
    for (long x : c_) c.emplace_back(x);
    return Poly(std::move(c));
}

FpPoly gcd(const FpPoly& a, const FpPoly& b) {
    FpPoly f = a, g = b;
    while (!g.is_zero()) {
        FpPoly r = f.divrem(g).second;
        f = g;
        g = r;
    }
    return f.is_zero() ? f : f.monic();
}

FpPoly FqContext::inv(const FpPoly& a) const {
    // extended Euclid on (a, psi)
    FpPoly r0 = psi, r1 = reduce(a);
    if (r1.is_zero()) fail(errc::division_by_zero, "inverse of zero in F_q");
    long p = psi.p();
    FpPoly t0(p), t1 = FpPoly::constant(p, 1);
    while (!r1.is_zero()) {
        auto [q, r] = r0.divrem(r1);
        FpPoly t2 = t0 - (q * t1).divrem(psi).second;
        r0 = r1;
        r1 = r;
        t0 = t1;
        t1 = reduce(t2);
    }
    // r0 = gcd = nonzero constant (psi irreducible)
    long c = mod_inverse(r0.coeff(0), p);
    return reduce(t0 * FpPoly::constant(p, c));
}

FpPoly FqContext::pow(FpPoly a, Integer e) const {
    a = reduce(a);
    if (sgn(e) < 0) {
        a = inv(a);
        e = -e;
    }
    FpPoly r = FpPoly::constant(p(), 1);
    while (sgn(e) > 0) {
        if (mpz_odd_p(e.get_mpz_t())) r = mul(r, a);
        a = mul(a, a);
        e >>= 1;
    }
    return r;
}

FpPoly FqContext::frobenius(const FpPoly& a, long k) const {
    FpPoly h = reduce(a);
    for (long i = 0; i < k; ++i) h = pow(h, Integer(p()));
    return h;
}

FqPoly::FqPoly(FqContext ctx, std::vector<FpPoly> coeffs) : ctx_(std::move(ctx)), c_(std::move(coeffs)) {
    for (auto& c : c_) c = ctx_.reduce(c);
    trim();
}

FpPoly FqPoly::coeff(long i) const {
    if (i >= 0 && i < static_cast<long>(c_.size())) return c_[static_cast<size_t>(i)];
    return FpPoly(ctx_.p());
}

FqPoly FqPoly::operator+(const FqPoly& o) const {
    std::vector<FpPoly> c(std::max(c_.size(), o.c_.size()), FpPoly(ctx_.p()));
    for (size_t i = 0; i < c_.size(); ++i) c[i] = c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) c[i] = ctx_.add(c[i], o.c_[i]);
    return FqPoly(ctx_, std::move(c));
}

FqPoly FqPoly::operator-(const FqPoly& o) const {
    std::vector<FpPoly> c(std::max(c_.size(), o.c_.size()), FpPoly(ctx_.p()));
    for (size_t i = 0; i < c_.size(); ++i) c[i] = c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) c[i] = ctx_.sub(c[i], o.c_[i]);
    return FqPoly(ctx_, std::move(c));
}

FqPoly FqPoly::operator*(const FqPoly& o) const {
    if (is_zero() || o.is_zero()) return FqPoly(ctx_);
    std::vector<FpPoly> c(c_.size() + o.c_.size() - 1, FpPoly(ctx_.p()));
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < o.c_.size(); ++j) c[i + j] = ctx_.add(c[i + j], ctx_.mul(c_[i], o.c_[j]));
    return FqPoly(ctx_, std::move(c));
}

std::pair<FqPoly, FqPoly> FqPoly::divrem(const FqPoly& d) const {
    if (d.is_zero()) fail(errc::division_by_zero, "FqPoly division by zero");
    FqPoly q(ctx_), r = *this;
    FpPoly inv_lc = ctx_.inv(d.c_.back());
    while (!r.is_zero() && r.degree() >= d.degree()) {
        long k = r.degree() - d.degree();
        FpPoly c = ctx_.mul(r.c_.back(), inv_lc);
        std::vector<FpPoly> t(static_cast<size_t>(k) + 1, FpPoly(ctx_.p()));
        t.back() = c;
        FqPoly m(ctx_, std::move(t));
        q = q + m;
        r = r - m * d;
    }
    return {q, r};
}

FqPoly FqPoly::monic() const {
    if (is_zero()) fail(errc::zero_polynomial, "cannot normalize zero");
    FpPoly inv_lc = ctx_.inv(c_.back());
    std::vector<FpPoly> c = c_;
    for (auto& x : c) x = ctx_.mul(x, inv_lc);
    return FqPoly(ctx_, std::move(c));
}

FqPoly FqPoly::derivative() const {
    if (c_.size() <= 1) return FqPoly(ctx_);
    std::vector<FpPoly> c(c_.size() - 1, FpPoly(ctx_.p()));
    for (size_t i = 1; i < c_.size(); ++i)
        c[i - 1] = ctx_.mul(c_[i], FpPoly::constant(ctx_.p(), static_cast<long>(i % static_cast<size_t>(ctx_.p()))));
    return FqPoly(ctx_, std::move(c));
}

FqPoly FqPoly::pow_mod(const Integer& e, const FqPoly& mod) const {
    FqPoly base = divrem(mod).second;
    std::vector<FpPoly> one{FpPoly::constant(ctx_.p(), 1)};
    FqPoly r(ctx_, std::move(one));
    Integer k = e;
    while (sgn(k) > 0) {
        if (mpz_odd_p(k.get_mpz_t())) r = (r * base).divrem(mod).second;
        base = (base * base).divrem(mod).second;
        k >>= 1;
    }
    return r;
}

FqPoly FqPoly::frobenius_pow(long k, const FqPoly& mod) const {
    FqPoly h = divrem(mod).second;
    for (long i = 0; i < k; ++i) h = h.pow_mod(Integer(ctx_.p()), mod);
    return h;
}

bool FqPoly::irreducible() const {
    int d = degree();
    if (d <= 0) return false;
    if (d == 1) return true;
    std::vector<FpPoly> xc{FpPoly(ctx_.p()), FpPoly::constant(ctx_.p(), 1)};
    FqPoly x(ctx_, std::move(xc));
    long f = ctx_.f();
    if (!(x.frobenius_pow(static_cast<long>(d) * f, *this) == x.divrem(*this).second)) return false;
    for (long r : prime_divisors(d)) {
        FqPoly g = gcd(x.frobenius_pow((d / r) * f, *this) - x, *this);
        if (g.degree() != 0) return false;
    }
    return true;
}

FqPoly FqPoly::squarefree_part() const {
    if (is_zero()) fail(errc::zero_polynomial, "squarefree part of zero");
    FqPoly f = monic();
    if (f.degree() == 0) return f;
    FqPoly fp = f.derivative();
    if (fp.is_zero()) {
        // f = h(Y^p); descend through the p-th root (Frobenius-inverse on
        // coefficients, exponents divided by p).
        long p = ctx_.p();
        std::vector<FpPoly> c;
        for (long i = 0; i <= f.degree(); i += p) c.push_back(ctx_.frobenius(f.coeff(i), ctx_.f() - 1));
        return FqPoly(ctx_, std::move(c)).squarefree_part();
    }
    FqPoly g = gcd(f, fp);
    if (g.degree() == 0) return f;
    FqPoly w = f.divrem(g).first;
    FqPoly r = g.squarefree_part();
    FqPoly common = gcd(w, r);
    return (w * r).divrem(common).first;
}

FqPoly gcd(const FqPoly& a, const FqPoly& b) {
    FqPoly f = a, g = b;
    while (!g.is_zero()) {
        FqPoly r = f.divrem(g).second;
        f = g;
        g = r;
    }
    return f.is_zero() ? f : f.monic();
}

} // namespace vallab
