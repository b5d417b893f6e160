#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "vallab/newton.hpp"
#include "vallab/poly.hpp"
#include "vallab/valvalue.hpp"

namespace vallab {

inline constexpr long kDefaultRefineDepth = 4;
inline constexpr long kDefaultStreamCap = 64;

// ---------------------------------------------------------------------------
// Irreducibility certificates over Q_p. Every certificate is re-checkable by
// running its predicate; nothing downstream ever trusts an uncertified input.
// ---------------------------------------------------------------------------

enum class CertKind {
    Eisenstein,           // p(X+c) satisfies Eisenstein's criterion at p
    IrreducibleModP,      // integral reduction irreducible over F_p
    TotallyRamifiedSlope, // single Newton segment, slope denominator = degree
    Constructed,          // built with prescribed (e, f), refinement-verified
    UserAsserted,         // caller vouches; invariants still need refinement
    RefinementVerified,   // bounded-depth Newton-polygon refinement succeeded
};

const char* cert_kind_name(CertKind k);

struct IrredCert {
    CertKind kind;
    Rational shift = Rational(0); // Eisenstein
    long depth = 0;               // RefinementVerified
    long e = 0, f = 0;            // Constructed

    std::string str() const;
};

bool check_eisenstein(const Poly& g, const Integer& p, const Rational& shift);
bool check_irreducible_mod_p(const Poly& g, const Integer& p);
bool check_totally_ramified_slope(const Poly& g, const Integer& p);
/// Re-runs the predicate behind a certificate.
bool recheck(const IrredCert& cert, const Poly& g, const Integer& p,
             long depth_budget = kDefaultRefineDepth);

// ---------------------------------------------------------------------------
// Bounded-depth refinement (Ore-style Newton polygons with residual
// polynomials, plus same-degree key-polynomial improvement steps). Either
// proves irreducibility over Q_p with invariants (e, f), proves a genuine
// factorization, or reports honestly that the budget ran out. Never guesses.
// ---------------------------------------------------------------------------

enum class RefineStatus { Irreducible, Reducible, Inconclusive };

struct RefineResult {
    RefineStatus status;
    long e = 0, f = 0;
    long depth_used = 0;
    std::vector<Poly> key_polys; // chain keys, in the original variable
    std::string note;
};

RefineResult refine(const Poly& g, const Integer& p, long depth_budget = kDefaultRefineDepth);

/// Certification pipeline, attempted in order: degree 1, IrreducibleModP,
/// Eisenstein with shifts 0..p-1, TotallyRamifiedSlope, refinement.
/// Throws not_certified when nothing conclusive is found (the input may
/// still be irreducible) or when a genuine factorization is exhibited.
IrredCert certify(const Poly& minpoly, const Integer& p, std::optional<CertKind> hint = {},
                  long depth_budget = kDefaultRefineDepth);

// ---------------------------------------------------------------------------
// Points of P^1 over the algebraic closure of Q_p.
// ---------------------------------------------------------------------------

/// alpha with certified monic minimal polynomial over Q (hence over Q_p).
/// Immutable after construction; invariants are computed eagerly where the
/// certificate determines them.
class AlgebraicElem {
  public:
    static AlgebraicElem make(const Integer& p, const Poly& minpoly,
                              std::optional<CertKind> hint = {},
                              long depth_budget = kDefaultRefineDepth);

    const Integer& prime() const { return p_; }
    const Poly& minpoly() const { return minpoly_; }
    const IrredCert& cert() const { return cert_; }
    long degree() const { return minpoly_.degree(); }
    const ValValue& v_alpha() const { return v_alpha_; }
    const std::vector<Poly>& key_polys() const { return keys_; }

    /// (e, f) with e*f = degree; throws depth_exceeded when the certificate
    /// does not determine them and refinement ran out of budget.
    std::pair<long, long> invariants() const;
    long ramification() const { return invariants().first; }
    long residue_degree() const { return invariants().second; }

  private:
    AlgebraicElem() = default;
    Integer p_;
    Poly minpoly_;
    IrredCert cert_{CertKind::UserAsserted};
    ValValue v_alpha_;
    std::optional<std::pair<long, long>> ef_;
    std::vector<Poly> keys_;
};

struct EvalVal {
    long k;     // multiplicity of the minimal polynomial in g
    ValValue t; // v(g0(alpha)) for the minpoly-free part g0
};

/// Writes g = minpoly^k * g0 exactly and returns (k, v(g0(alpha))), the
/// latter computed as vp(Res(minpoly, g0)) / deg(minpoly). Depends only on
/// (minpoly, g): all conjugates share the same valuation.
EvalVal eval_val(const AlgebraicElem& a, const Poly& g);

/// Equality of the valuation domains W_alpha: monic polynomials irreducible
/// over Q_p coincide iff the points are conjugate.
bool equal(const AlgebraicElem& a, const AlgebraicElem& b);

// ---------------------------------------------------------------------------
// Digit-stream elements of Q_p (the rank-one e = f = 1 case): a deterministic
// digit oracle plus an integer valuation offset. alpha = p^offset * sum d_i p^i.
// ---------------------------------------------------------------------------

class StreamElem {
  public:
    using DigitFn = std::function<long(long)>;

    StreamElem(Integer p, DigitFn digits, long offset = 0, long cap = kDefaultStreamCap);
    static StreamElem constant(const Integer& p, long digit, long offset = 0,
                               long cap = kDefaultStreamCap);
    static StreamElem periodic(const Integer& p, std::vector<long> pattern, long offset = 0,
                               long cap = kDefaultStreamCap);
    /// Explicit digit list; indices beyond the list read 0.
    static StreamElem from_list(const Integer& p, std::vector<long> digits, long offset = 0,
                                long cap = kDefaultStreamCap);

    const Integer& prime() const { return p_; }
    long offset() const { return offset_; }
    long cap() const { return cap_; }
    long digit(long i) const;
    /// p^offset * sum_{i<n} d_i p^i, exact.
    Rational partial_sum(long n) const;

  private:
    Integer p_;
    DigitFn digits_;
    long offset_;
    long cap_;
};

struct StreamVal {
    bool exact;
    ValValue v; // the exact value, or the certified lower bound when !exact
};

/// Evaluates v(g(alpha)) at increasing digit precision N <= cap. Returns an
/// Exact value as soon as the partial evaluation's valuation drops below the
/// ultrametric error bound; otherwise a LowerBound at the cap. Exact results
/// are stable under increasing the cap.
StreamVal stream_eval_val(const StreamElem& a, const Poly& g,
                          std::optional<long> cap_override = {});

/// The point at infinity; evaluation is defined via the substitution X -> 1/X.
struct InfinityElem {
    Integer p;
};

} // namespace vallab
