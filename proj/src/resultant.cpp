#include "vallab/resultant.hpp"

namespace vallab {

namespace {

// Fraction-free Gaussian elimination (Bareiss). Every division is exact in
// the coefficient domain; works over Z and over Q[X].
template <typename T, typename IsZero, typename DivExact>
T bareiss_determinant(std::vector<std::vector<T>> m, const T& one, IsZero is_zero,
                      DivExact div_exact) {
    const size_t n = m.size();
    if (n == 0) return one;
    int sign = 1;
    T prev = one;
    for (size_t k = 0; k + 1 < n; ++k) {
        size_t pivot = k;
        while (pivot < n && is_zero(m[pivot][k])) ++pivot;
        if (pivot == n) return T(); // singular
        if (pivot != k) {
            std::swap(m[pivot], m[k]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j)
                m[i][j] = div_exact(m[k][k] * m[i][j] - m[i][k] * m[k][j], prev);
            m[i][k] = T();
        }
        prev = m[k][k];
    }
    T det = m[n - 1][n - 1];
    return sign < 0 ? T() - det : det;
}

Integer div_exact_z(const Integer& a, const Integer& b) {
    Integer q;
    mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

Integer binomial(long n, long k) {
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

} // namespace

Rational resultant(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Rational(0);
    const long m = a.degree(), n = b.degree();
    if (m == 0) return a.leading().pow(n);
    if (n == 0) return b.leading().pow(m);

    auto [A, da] = clear_denominators(a);
    auto [B, db] = clear_denominators(b);
    const size_t N = static_cast<size_t>(m + n);
    std::vector<std::vector<Integer>> syl(N, std::vector<Integer>(N, Integer(0)));
    for (long r = 0; r < n; ++r)
        for (long k = 0; k <= m; ++k) syl[r][r + k] = A[static_cast<size_t>(m - k)];
    for (long r = 0; r < m; ++r)
        for (long k = 0; k <= n; ++k) syl[n + r][r + k] = B[static_cast<size_t>(n - k)];

    Integer det = bareiss_determinant<Integer>(
        std::move(syl), Integer(1), [](const Integer& x) { return sgn(x) == 0; }, div_exact_z);

    // Res(da*a, db*b) = da^n * db^m * Res(a, b).
    Integer corr = pow(da, static_cast<unsigned long>(n)) * pow(db, static_cast<unsigned long>(m));
    return Rational(det, corr);
}

Poly taylor_shift_resultant(const Poly& p, const Poly& q) {
    if (p.is_zero() || q.is_zero()) fail(errc::zero_polynomial, "difference polynomial of zero");
    if (!p.is_monic()) fail(errc::invalid_argument, "difference polynomial needs monic p");
    const long m = p.degree(), n = q.degree();
    if (m == 0) return Poly(Rational(1));
    if (n == 0) return Poly(q.leading().pow(m));

    // q(X+Y) as a polynomial in Y with coefficients in Q[X]:
    // c_j(X) = sum_{i>=j} q_i * C(i,j) * X^(i-j).
    std::vector<Poly> c(static_cast<size_t>(n) + 1);
    for (long j = 0; j <= n; ++j) {
        std::vector<Rational> cj(static_cast<size_t>(n - j) + 1, Rational(0));
        for (long i = j; i <= n; ++i)
            cj[static_cast<size_t>(i - j)] = q.coeff(i) * Rational(binomial(i, j));
        c[static_cast<size_t>(j)] = Poly(std::move(cj));
    }

    const size_t N = static_cast<size_t>(m + n);
    std::vector<std::vector<Poly>> syl(N, std::vector<Poly>(N));
    for (long r = 0; r < n; ++r)
        for (long k = 0; k <= m; ++k) syl[r][r + k] = Poly(p.coeff(m - k));
    for (long r = 0; r < m; ++r)
        for (long k = 0; k <= n; ++k) syl[n + r][r + k] = c[static_cast<size_t>(n - k)];

    Poly det = bareiss_determinant<Poly>(
        std::move(syl), Poly(Rational(1)), [](const Poly& x) { return x.is_zero(); },
        [](const Poly& a, const Poly& b) { return a.div_exact(b); });
    return det;
}

} // namespace vallab
