#pragma once

#include <string>
#include <vector>

#include "vallab/rational.hpp"

namespace vallab {

/// Element of Q ∪ {+∞}: the value of a p-adic valuation, with v(0) = ∞.
/// Finite values form a totally ordered additive group; ∞ + x = ∞ and
/// ∞ > x for every finite x. All distances and radii in the library live
/// here, in log scale; the real number p^(-v) is never materialized.
class ValValue {
  public:
    ValValue() : inf_(false), v_(0) {}
    ValValue(Rational v) : inf_(false), v_(std::move(v)) {}
    ValValue(long v) : inf_(false), v_(v) {}
    static ValValue infinity() {
        ValValue v;
        v.inf_ = true;
        return v;
    }

    bool is_infinite() const { return inf_; }
    bool is_finite() const { return !inf_; }

    /// The finite value; throws on ∞.
    const Rational& finite() const {
        if (inf_) fail(errc::invalid_argument, "infinite valuation has no finite value");
        return v_;
    }

    ValValue operator+(const ValValue& o) const {
        if (inf_ || o.inf_) return infinity();
        return ValValue(v_ + o.v_);
    }

    /// Defined when the subtrahend is finite (∞ - ∞ has no meaning here).
    ValValue operator-(const ValValue& o) const {
        if (o.inf_) fail(errc::invalid_argument, "cannot subtract an infinite valuation");
        if (inf_) return infinity();
        return ValValue(v_ - o.v_);
    }

    ValValue operator-() const {
        if (inf_) fail(errc::invalid_argument, "cannot negate an infinite valuation");
        return ValValue(-v_);
    }

    bool operator==(const ValValue& o) const {
        if (inf_ != o.inf_) return false;
        return inf_ || v_ == o.v_;
    }

    std::strong_ordering operator<=>(const ValValue& o) const {
        if (inf_ && o.inf_) return std::strong_ordering::equal;
        if (inf_) return std::strong_ordering::greater;
        if (o.inf_) return std::strong_ordering::less;
        return v_ <=> o.v_;
    }

    std::string str() const { return inf_ ? "inf" : v_.str(); }

  private:
    bool inf_;
    Rational v_;
};

inline ValValue min(const ValValue& a, const ValValue& b) { return a < b ? a : b; }
inline ValValue max(const ValValue& a, const ValValue& b) { return a < b ? b : a; }

std::ostream& operator<<(std::ostream& os, const ValValue& v);

/// p-adic valuation of a rational: the exponent of p in x, with vp(0) = ∞.
/// Sign is ignored; vp is defined on all of Q.
ValValue vp(const Rational& x, const Integer& p);
ValValue vp(const Integer& x, const Integer& p);

/// Requires p probably-prime and >= 2; throws invalid_argument otherwise.
void require_prime(const Integer& p);

/// Symbolic rendering of the absolute value |x| = p^(-v): no float is ever
/// produced. kind is 0 for |0| = 0 (v = ∞), 1 for units (v = 0), 2 otherwise.
struct AbsScale {
    int kind;
    Integer p;
    Rational exponent; // -v, meaningful for kind == 2

    std::string str() const;
};

AbsScale abs_scale(const ValValue& v, const Integer& p);

} // namespace vallab
