#include "vallab/algelem.hpp"
#include "vallab/fq.hpp"

namespace vallab {

namespace {

std::optional<long> small_prime(const Integer& p) {
    if (!p.fits_slong_p()) return std::nullopt;
    long v = p.get_si();
    if (v > (1L << 20)) return std::nullopt;
    return v;
}

// Minimum coefficient valuation (Gauss valuation of a nonzero polynomial).
Rational gauss_vp(const Poly& f, const Integer& p) {
    ValValue m = ValValue::infinity();
    for (const auto& c : f.coeffs()) m = min(m, vp(c, p));
    return m.finite();
}

// f scaled so that its roots are multiplied by p^s: p^(s*n) * f(X / p^s).
Poly scale_roots(const Poly& f, const Integer& p, long s) {
    return f.scale_arg(Rational(p).pow(-s)).monic();
}

// phi-adic expansion of g: g = sum a_i phi^i with deg a_i < deg phi.
std::vector<Poly> phi_expansion(const Poly& g, const Poly& phi) {
    std::vector<Poly> digits;
    Poly cur = g;
    while (!cur.is_zero()) {
        auto [q, r] = cur.divrem(phi);
        digits.push_back(r);
        cur = q;
    }
    return digits;
}

// Reduction mod p of a p-integral rational coefficient polynomial.
FpPoly reduce_mod_p(const Poly& f, long p) { return FpPoly::from_poly(f, p); }

struct Side {
    Rational slope; // the single side's slope (negative of the root valuation)
    long h;         // slope = -h/e in lowest terms, e >= 1
    long e;
};

// Lower hull of (i, v_i); returns the single side or nullopt when the hull
// has several sides (a genuine factorization).
std::optional<Side> single_side(const std::vector<std::pair<long, Rational>>& pts) {
    std::vector<std::pair<long, Rational>> hull;
    for (const auto& pt : pts) {
        while (hull.size() >= 2) {
            const auto& a = hull[hull.size() - 2];
            const auto& b = hull[hull.size() - 1];
            Rational lhs = (b.second - a.second) * Rational(pt.first - a.first);
            Rational rhs = (pt.second - a.second) * Rational(b.first - a.first);
            if (lhs < rhs) break;
            hull.pop_back();
        }
        hull.push_back(pt);
    }
    if (hull.size() != 2) return std::nullopt;
    Rational slope = (hull[1].second - hull[0].second) / Rational(hull[1].first - hull[0].first);
    Rational neg = -slope;
    Side s;
    s.slope = slope;
    if (!neg.num().fits_slong_p() || !neg.den().fits_slong_p()) return std::nullopt;
    s.h = neg.num().get_si();
    s.e = neg.den().get_si();
    return s;
}

RefineResult reducible(const std::string& why) {
    RefineResult r;
    r.status = RefineStatus::Reducible;
    r.note = why;
    return r;
}

RefineResult inconclusive(long depth, const std::string& why) {
    RefineResult r;
    r.status = RefineStatus::Inconclusive;
    r.depth_used = depth;
    r.note = why;
    return r;
}

RefineResult irreducible(long e, long f, long depth, std::vector<Poly> keys) {
    RefineResult r;
    r.status = RefineStatus::Irreducible;
    r.e = e;
    r.f = f;
    r.depth_used = depth;
    r.key_polys = std::move(keys);
    return r;
}

} // namespace

RefineResult refine(const Poly& g_in, const Integer& p, long depth_budget) {
    require_prime(p);
    if (g_in.is_zero() || !g_in.is_monic())
        fail(errc::invalid_argument, "refinement needs a monic polynomial");
    const long n = g_in.degree();
    if (n < 1) fail(errc::invalid_argument, "refinement needs degree >= 1");
    if (n == 1) return irreducible(1, 1, 0, {});

    // Normalize to p-integral coefficients by scaling the roots: replace
    // alpha with p^s * alpha. The generated field, hence (e, f), is unchanged.
    Poly g = g_in;
    long scale = 0;
    for (long i = 0; i < n; ++i) {
        Rational v = vp(g.coeff(i), p).is_infinite() ? Rational(0) : vp(g.coeff(i), p).finite();
        if (v < Rational(0)) {
            // need s with v + s*(n - i) >= 0
            Rational need = -v / Rational(n - i);
            long s = need.ceil().get_si();
            if (s > scale) scale = s;
        }
    }
    if (scale > 0) g = scale_roots(g, p, scale);

    auto unscale_key = [&](const Poly& key) {
        if (scale == 0) return key;
        return key.scale_arg(Rational(pow(p, static_cast<unsigned long>(scale))));
    };

    // ---- order 1: the Newton polygon of g itself ----
    if (g.coeff(0).is_zero()) return reducible("X divides the polynomial");
    NewtonPolygon np = NewtonPolygon::of(g, p);
    if (np.segments().size() != 1) return reducible("Newton polygon has several segments");
    Rational rootval = -np.segments()[0].slope; // h/e0 >= 0, lowest terms
    long e0 = rootval.den().get_si();
    long h = rootval.num().get_si();

    if (e0 == static_cast<long>(n)) return irreducible(n, 1, 1, {});

    auto sp = small_prime(p);
    if (!sp) return inconclusive(1, "prime too large for residual analysis");
    const long pl = *sp;

    if (e0 > 1) {
        // Fractional slope: residual polynomial over F_p of degree n/e0.
        long len = n / e0;
        std::vector<long> coeffs;
        for (long j = 0; j <= len; ++j) {
            Rational want(h * (len - j)); // height of the side at x = j*e0
            ValValue have = vp(g.coeff(j * e0), p);
            if (have == ValValue(want)) {
                Rational u = g.coeff(j * e0) / Rational(p).pow(h * (len - j));
                coeffs.push_back(reduce_mod_p(Poly(u), pl).coeff(0));
            } else {
                coeffs.push_back(0);
            }
        }
        FpPoly R(pl, std::move(coeffs));
        auto factors = R.factor();
        if (factors.size() != 1) return reducible("residual polynomial splits");
        auto [tau, mult] = factors[0];
        if (mult == 1) return irreducible(e0, tau.degree(), 1, {});
        return inconclusive(1, "ramified residual with multiplicity; beyond configured depth");
    }

    // e0 == 1: integer slope. Rescale the roots to valuation 0.
    if (h != 0) {
        g = scale_roots(g, p, -h);
        scale -= h;
    }

    // ---- slope 0: reduction mod p ----
    FpPoly gbar = reduce_mod_p(g, pl);
    auto branches = gbar.factor();
    if (branches.size() != 1) return reducible("reduction mod p has coprime factors");
    FpPoly psi = branches[0].first;
    long m = branches[0].second;
    long f1 = psi.degree();
    if (m == 1) return irreducible(1, f1, 1, {});

    // ---- order 2: phi-adic polygon with refinement steps ----
    FqContext ctx{psi};
    Poly phi = psi.lift();
    long depth = 1;
    for (;;) {
        if (++depth > depth_budget)
            return inconclusive(depth_budget, "refinement depth budget exhausted");

        auto digits = phi_expansion(g, phi);
        if (static_cast<long>(digits.size()) != m + 1)
            fail(errc::invalid_argument, "unexpected key-polynomial expansion length");
        if (digits[0].is_zero()) return reducible("key polynomial divides the input");

        std::vector<std::pair<long, Rational>> pts;
        for (long i = 0; i <= m; ++i) {
            if (digits[static_cast<size_t>(i)].is_zero()) continue;
            pts.emplace_back(i, gauss_vp(digits[static_cast<size_t>(i)], p));
        }
        auto side = single_side(pts);
        if (!side) return reducible("second-order polygon has several sides");
        long h2 = side->h, e2 = side->e;
        if (h2 <= 0) fail(errc::invalid_argument, "second-order polygon not principal");
        long len2 = m / e2;

        if (len2 == 1) return irreducible(e2, f1, depth, {unscale_key(phi)});

        // Residual polynomial over F_q along the side.
        std::vector<FpPoly> rc;
        for (long j = 0; j <= len2; ++j) {
            const Poly& a = digits[static_cast<size_t>(j * e2)];
            Rational want(h2 * (len2 - j));
            if (!a.is_zero() && gauss_vp(a, p) == want) {
                Poly u = a * Rational(p).pow(-h2 * (len2 - j));
                rc.push_back(ctx.reduce(reduce_mod_p(u, pl)));
            } else {
                rc.push_back(FpPoly(pl));
            }
        }
        FqPoly R(ctx, std::move(rc));
        FqPoly s = R.squarefree_part();
        if (!s.irreducible()) return reducible("second-order residual splits");
        long dt = s.degree();
        long mult = len2 / dt;
        if (mult == 1) return irreducible(e2, f1 * dt, depth, {unscale_key(phi)});
        if (e2 == 1 && dt == 1) {
            // Same-degree refinement step: absorb the repeated residual root
            // into the key polynomial and retry one level deeper. s = Y + c
            // monic linear, so the root is -c.
            FpPoly root = FpPoly(pl) - s.coeff(0);
            phi = phi - root.lift() * Rational(p).pow(h2);
            continue;
        }
        return inconclusive(depth, "higher-order key polynomial needed; beyond configured depth");
    }
}

} // namespace vallab
