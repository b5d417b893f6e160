#include "vallab/algelem.hpp"

#include <sstream>

#include "vallab/fq.hpp"
#include "vallab/resultant.hpp"

namespace vallab {

const char* cert_kind_name(CertKind k) {
    switch (k) {
    case CertKind::Eisenstein: return "Eisenstein";
    case CertKind::IrreducibleModP: return "IrreducibleModP";
    case CertKind::TotallyRamifiedSlope: return "TotallyRamifiedSlope";
    case CertKind::Constructed: return "Constructed";
    case CertKind::UserAsserted: return "UserAsserted";
    case CertKind::RefinementVerified: return "RefinementVerified";
    }
    return "unknown";
}

std::string IrredCert::str() const {
    std::ostringstream os;
    os << cert_kind_name(kind);
    switch (kind) {
    case CertKind::Eisenstein:
        if (!shift.is_zero()) os << "(shift=" << shift.str() << ")";
        break;
    case CertKind::RefinementVerified: os << "(depth=" << depth << ")"; break;
    case CertKind::Constructed: os << "(e=" << e << ",f=" << f << ")"; break;
    default: break;
    }
    return os.str();
}

bool check_eisenstein(const Poly& g, const Integer& p, const Rational& shift) {
    if (g.is_zero() || !g.is_monic() || g.degree() < 1) return false;
    Poly h = g.shift(shift);
    long n = h.degree();
    for (long i = 0; i < n; ++i)
        if (vp(h.coeff(i), p) < ValValue(1)) return false;
    return vp(h.coeff(0), p) == ValValue(1);
}

bool check_irreducible_mod_p(const Poly& g, const Integer& p) {
    if (g.is_zero() || !g.is_monic() || g.degree() < 1) return false;
    if (!p.fits_slong_p() || p.get_si() > (1L << 20)) return false;
    for (const auto& c : g.coeffs())
        if (vp(c, p) < ValValue(0)) return false;
    return FpPoly::from_poly(g, p.get_si()).irreducible();
}

bool check_totally_ramified_slope(const Poly& g, const Integer& p) {
    if (g.is_zero() || !g.is_monic() || g.degree() < 1) return false;
    long n = g.degree();
    if (n == 1) return true; // degree one is trivially irreducible
    if (g.coeff(0).is_zero()) return false;
    NewtonPolygon np = NewtonPolygon::of(g, p);
    if (np.segments().size() != 1) return false;
    const auto& seg = np.segments()[0];
    // slope -a/n in lowest terms with gcd(a, n) = 1 is exactly: denominator n.
    return seg.length == n && seg.slope.den() == Integer(n);
}

bool recheck(const IrredCert& cert, const Poly& g, const Integer& p, long depth_budget) {
    switch (cert.kind) {
    case CertKind::Eisenstein: return check_eisenstein(g, p, cert.shift);
    case CertKind::IrreducibleModP: return check_irreducible_mod_p(g, p);
    case CertKind::TotallyRamifiedSlope: return check_totally_ramified_slope(g, p);
    case CertKind::Constructed: {
        auto r = refine(g, p, depth_budget);
        return r.status == RefineStatus::Irreducible && r.e == cert.e && r.f == cert.f;
    }
    case CertKind::RefinementVerified: {
        auto r = refine(g, p, std::max(depth_budget, cert.depth));
        return r.status == RefineStatus::Irreducible;
    }
    case CertKind::UserAsserted: return true; // vouched, nothing to re-run
    }
    return false;
}

namespace {

struct CertOutcome {
    IrredCert cert;
    std::optional<std::pair<long, long>> ef;
    std::vector<Poly> keys;
};

CertOutcome certify_impl(const Poly& g, const Integer& p, std::optional<CertKind> hint,
                         long depth_budget) {
    require_prime(p);
    if (g.is_zero() || !g.is_monic() || g.degree() < 1)
        fail(errc::invalid_argument, "certification needs a monic polynomial of degree >= 1");
    const long n = g.degree();

    if (hint && *hint == CertKind::UserAsserted) {
        CertOutcome out{IrredCert{CertKind::UserAsserted}, {}, {}};
        auto r = refine(g, p, depth_budget);
        if (r.status == RefineStatus::Reducible)
            fail(errc::not_certified, "asserted polynomial is provably reducible: " + r.note);
        if (r.status == RefineStatus::Irreducible) {
            out.ef = {{r.e, r.f}};
            out.keys = r.key_polys;
        }
        return out;
    }

    if (n == 1) return {IrredCert{CertKind::TotallyRamifiedSlope}, {{1, 1}}, {}};

    if (check_irreducible_mod_p(g, p)) return {IrredCert{CertKind::IrreducibleModP}, {{1, n}}, {}};

    long shift_cap = 4096;
    for (long c = 0; Integer(c) < p && c < shift_cap; ++c) {
        if (check_eisenstein(g, p, Rational(c))) {
            IrredCert cert{CertKind::Eisenstein};
            cert.shift = Rational(c);
            std::vector<Poly> keys;
            if (c != 0) keys.push_back(Poly({Rational(-c), Rational(1)}));
            return {cert, {{n, 1}}, std::move(keys)};
        }
    }

    if (check_totally_ramified_slope(g, p))
        return {IrredCert{CertKind::TotallyRamifiedSlope}, {{n, 1}}, {}};

    auto r = refine(g, p, depth_budget);
    if (r.status == RefineStatus::Irreducible) {
        IrredCert cert{CertKind::RefinementVerified};
        cert.depth = r.depth_used;
        return {cert, {{r.e, r.f}}, r.key_polys};
    }
    if (r.status == RefineStatus::Reducible)
        fail(errc::not_certified, "provably reducible over Q_p: " + r.note);
    fail(errc::not_certified,
         "irreducibility not established within depth budget (input may still be irreducible): " +
             r.note);
}

} // namespace

IrredCert certify(const Poly& minpoly, const Integer& p, std::optional<CertKind> hint,
                  long depth_budget) {
    return certify_impl(minpoly, p, hint, depth_budget).cert;
}

AlgebraicElem AlgebraicElem::make(const Integer& p, const Poly& minpoly,
                                  std::optional<CertKind> hint, long depth_budget) {
    CertOutcome out = certify_impl(minpoly, p, hint, depth_budget);
    AlgebraicElem a;
    a.p_ = p;
    a.minpoly_ = minpoly;
    a.cert_ = out.cert;
    a.ef_ = out.ef;
    a.keys_ = std::move(out.keys);
    // Single-slope law: v(alpha) = vp(constant term) / degree.
    a.v_alpha_ = vp(minpoly.coeff(0), p).is_infinite()
                     ? ValValue::infinity()
                     : ValValue(vp(minpoly.coeff(0), p).finite() / Rational(minpoly.degree()));
    return a;
}

std::pair<long, long> AlgebraicElem::invariants() const {
    if (!ef_)
        fail(errc::depth_exceeded,
             "invariants undetermined: refinement did not conclude within its depth budget");
    return *ef_;
}

EvalVal eval_val(const AlgebraicElem& a, const Poly& g) {
    if (g.is_zero()) fail(errc::zero_polynomial, "eval_val of the zero polynomial");
    const Poly& q = a.minpoly();
    Poly g0 = g;
    long k = 0;
    for (;;) {
        auto [quo, rem] = g0.divrem(q);
        if (!rem.is_zero()) break;
        g0 = quo;
        ++k;
    }
    Rational res = resultant(q, g0);
    ValValue v = vp(res, a.prime());
    // g0 is coprime to the irreducible q, so the resultant is nonzero.
    return {k, ValValue(v.finite() / Rational(q.degree()))};
}

bool equal(const AlgebraicElem& a, const AlgebraicElem& b) {
    if (a.prime() != b.prime())
        fail(errc::different_prime, "handles over different primes are incomparable");
    return a.minpoly() == b.minpoly();
}

StreamElem::StreamElem(Integer p, DigitFn digits, long offset, long cap)
    : p_(std::move(p)), digits_(std::move(digits)), offset_(offset), cap_(cap) {
    require_prime(p_);
    if (cap_ < 1) fail(errc::invalid_argument, "stream cap must be positive");
}

StreamElem StreamElem::constant(const Integer& p, long digit, long offset, long cap) {
    return StreamElem(
        p, [digit](long) { return digit; }, offset, cap);
}

StreamElem StreamElem::periodic(const Integer& p, std::vector<long> pattern, long offset,
                                long cap) {
    if (pattern.empty()) fail(errc::invalid_argument, "empty digit pattern");
    return StreamElem(
        p,
        [pattern = std::move(pattern)](long i) {
            return pattern[static_cast<size_t>(i) % pattern.size()];
        },
        offset, cap);
}

StreamElem StreamElem::from_list(const Integer& p, std::vector<long> digits, long offset,
                                 long cap) {
    return StreamElem(
        p,
        [digits = std::move(digits)](long i) {
            return i < static_cast<long>(digits.size()) ? digits[static_cast<size_t>(i)] : 0;
        },
        offset, cap);
}

long StreamElem::digit(long i) const {
    long d = digits_(i);
    if (d < 0 || Integer(d) >= p_) fail(errc::invalid_argument, "digit out of range");
    return d;
}

Rational StreamElem::partial_sum(long n) const {
    Integer acc(0);
    Integer pk(1);
    for (long i = 0; i < n; ++i) {
        acc += Integer(digit(i)) * pk;
        pk *= p_;
    }
    return Rational(acc) * Rational(p_).pow(offset_);
}

StreamVal stream_eval_val(const StreamElem& a, const Poly& g, std::optional<long> cap_override) {
    if (g.is_zero()) fail(errc::zero_polynomial, "stream evaluation of the zero polynomial");
    const Integer& p = a.prime();
    long cap = cap_override.value_or(a.cap());
    if (cap < 1) fail(errc::invalid_argument, "stream cap must be positive");

    // Clear the denominator power: g = G / p^w with G p-integral.
    long w = 0;
    for (const auto& c : g.coeffs()) {
        ValValue v = vp(c, p);
        if (v.is_finite() && v.finite() < Rational(0)) {
            long need = (-v.finite()).ceil().get_si();
            if (need > w) w = need;
        }
    }
    Poly G = g * Rational(p).pow(w);
    if (G.degree() == 0) return {true, vp(G.coeff(0), p) - ValValue(w)};

    // Ultrametric error bound: v(G(alpha) - G(alpha_N)) >= offset + N +
    // (deg G - 1) * min(offset, 0) for p-integral G.
    long o = a.offset();
    Rational slack = Rational(G.degree() - 1) * Rational(std::min(o, 0L));

    ValValue last_val = ValValue::infinity();
    Rational last_bound(0);
    for (long N = 1; N <= cap; ++N) {
        Rational alpha_n = a.partial_sum(N);
        last_val = vp(G(alpha_n), p);
        last_bound = Rational(o + N) + slack;
        if (last_val < ValValue(last_bound)) return {true, last_val - ValValue(w)};
    }
    return {false, min(last_val, ValValue(last_bound)) - ValValue(w)};
}

} // namespace vallab
