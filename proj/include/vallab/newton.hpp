#pragma once

#include <vector>

#include "vallab/poly.hpp"
#include "vallab/valvalue.hpp"

namespace vallab {

/// Lower convex hull of the points (i, vp(c_i)) of a nonzero polynomial.
/// Slopes are strictly increasing and the lengths sum to
/// degree - (order of vanishing at 0); the multiset of valuations of the
/// nonzero roots in the algebraic closure is {-slope, with multiplicity
/// = length} per segment.
struct NewtonSegment {
    Rational slope;
    long length;

    bool operator==(const NewtonSegment&) const = default;
};

class NewtonPolygon {
  public:
    static NewtonPolygon of(const Poly& f, const Integer& p);

    long order_at_zero() const { return ord0_; }
    const std::vector<NewtonSegment>& segments() const { return segments_; }

    /// (valuation, multiplicity) of nonzero roots; ascending valuation.
    std::vector<std::pair<Rational, long>> root_valuations() const;

    /// Largest root valuation (the last slope negated); requires at least
    /// one segment.
    Rational max_root_valuation() const;
    Rational min_root_valuation() const;

  private:
    long ord0_ = 0;
    std::vector<NewtonSegment> segments_;
};

} // namespace vallab
