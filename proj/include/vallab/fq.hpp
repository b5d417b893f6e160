#pragma once

#include <vector>

#include "vallab/poly.hpp"

namespace vallab {

/// Dense polynomial over F_p for a small prime p; coefficients live in
/// [0, p). Backs the residual-polynomial analysis of the refinement engine
/// and the unramified seed search. Desk scale: degrees stay in the single
/// digits, so trial division is the factorization method of choice.
class FpPoly {
  public:
    explicit FpPoly(long p) : p_(p) {}
    FpPoly(long p, std::vector<long> coeffs);
    static FpPoly x(long p) { return FpPoly(p, {0, 1}); }
    static FpPoly constant(long p, long c) { return FpPoly(p, {c}); }
    /// Reduction mod p; requires p-integral coefficients.
    static FpPoly from_poly(const Poly& f, long p);
    /// k-th monic polynomial of degree d in base-p counting order.
    static FpPoly nth_monic(long p, int d, long k);

    long p() const { return p_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
    bool is_monic() const { return !c_.empty() && c_.back() == 1; }
    long coeff(long i) const {
        return (i >= 0 && i < static_cast<long>(c_.size())) ? c_[static_cast<size_t>(i)] : 0;
    }
    const std::vector<long>& coeffs() const { return c_; }

    bool operator==(const FpPoly& o) const { return p_ == o.p_ && c_ == o.c_; }

    FpPoly operator+(const FpPoly& o) const;
    FpPoly operator-(const FpPoly& o) const;
    FpPoly operator*(const FpPoly& o) const;
    std::pair<FpPoly, FpPoly> divrem(const FpPoly& d) const;
    FpPoly monic() const;
    FpPoly derivative() const;
    long eval(long x) const;

    FpPoly pow_mod(long e, const FpPoly& mod) const;
    /// h |-> h^(p^k) mod f applied to this polynomial.
    FpPoly frobenius_pow(long k, const FpPoly& mod) const;

    bool irreducible() const; // Rabin's test
    /// Full factorization into monic irreducibles with multiplicities,
    /// deterministic (trial division in counting order). Input must be
    /// nonzero; the unit factor is dropped.
    std::vector<std::pair<FpPoly, int>> factor() const;

    /// Lift with coefficients in {0,...,p-1} into Q[X].
    Poly lift() const;

  private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    long p_;
    std::vector<long> c_{};
};

FpPoly gcd(const FpPoly& a, const FpPoly& b);

/// The field F_q = F_p[u]/(psi) with psi monic irreducible; elements are
/// FpPoly of degree < deg(psi).
struct FqContext {
    FpPoly psi;

    long p() const { return psi.p(); }
    int f() const { return psi.degree(); }

    FpPoly reduce(const FpPoly& a) const { return a.divrem(psi).second; }
    FpPoly add(const FpPoly& a, const FpPoly& b) const { return a + b; }
    FpPoly sub(const FpPoly& a, const FpPoly& b) const { return a - b; }
    FpPoly mul(const FpPoly& a, const FpPoly& b) const { return reduce(a * b); }
    FpPoly inv(const FpPoly& a) const; // extended Euclid; throws on zero
    FpPoly pow(FpPoly a, Integer e) const;
    /// u |-> u^(p^k): the Frobenius on elements.
    FpPoly frobenius(const FpPoly& a, long k) const;
};

/// Polynomial over F_q, used for residual polynomials of second-order
/// Newton polygons. Only the operations the refinement needs.
class FqPoly {
  public:
    FqPoly(FqContext ctx) : ctx_(std::move(ctx)) {}
    FqPoly(FqContext ctx, std::vector<FpPoly> coeffs);

    const FqContext& ctx() const { return ctx_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    FpPoly coeff(long i) const;

    bool operator==(const FqPoly& o) const { return c_ == o.c_; }

    FqPoly operator+(const FqPoly& o) const;
    FqPoly operator-(const FqPoly& o) const;
    FqPoly operator*(const FqPoly& o) const;
    std::pair<FqPoly, FqPoly> divrem(const FqPoly& d) const;
    FqPoly monic() const;
    FqPoly derivative() const;
    FqPoly pow_mod(const Integer& e, const FqPoly& mod) const;
    FqPoly frobenius_pow(long k, const FqPoly& mod) const; // h^(p^k) mod

    bool irreducible() const; // Rabin over F_q
    /// Squarefree part (product of the distinct irreducible factors),
    /// correct in characteristic p (p-th-root descent when f' = 0).
    FqPoly squarefree_part() const;

  private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
    FqContext ctx_;
    std::vector<FpPoly> c_{};
};

FqPoly gcd(const FqPoly& a, const FqPoly& b);

} // namespace vallab
