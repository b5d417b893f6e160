#include "vallab/newton.hpp"

#include <algorithm>

namespace vallab {

NewtonPolygon NewtonPolygon::of(const Poly& f, const Integer& p) {
    if (f.is_zero()) fail(errc::zero_polynomial, "Newton polygon of the zero polynomial");
    NewtonPolygon np;
    np.ord0_ = f.order_at_zero();

    // Points (i, vp(c_i)) for the nonzero coefficients from ord0 to deg.
    std::vector<std::pair<long, Rational>> pts;
    for (long i = np.ord0_; i <= f.degree(); ++i) {
        const Rational& c = f.coeff(i);
        if (c.is_zero()) continue;
        pts.emplace_back(i, vp(c, p).finite());
    }

    // Monotone-chain lower hull; exact rational cross products.
    std::vector<std::pair<long, Rational>> hull;
    for (const auto& pt : pts) {
        while (hull.size() >= 2) {
            const auto& a = hull[hull.size() - 2];
            const auto& b = hull[hull.size() - 1];
            // Keep b only if it is strictly below the chord a..pt.
            Rational lhs = (b.second - a.second) * Rational(pt.first - a.first);
            Rational rhs = (pt.second - a.second) * Rational(b.first - a.first);
            if (lhs < rhs) break;
            hull.pop_back();
        }
        hull.push_back(pt);
    }

    for (size_t i = 1; i < hull.size(); ++i) {
        Rational run(hull[i].first - hull[i - 1].first);
        NewtonSegment seg{(hull[i].second - hull[i - 1].second) / run,
                          hull[i].first - hull[i - 1].first};
        np.segments_.push_back(seg);
    }
    return np;
}

std::vector<std::pair<Rational, long>> NewtonPolygon::root_valuations() const {
    std::vector<std::pair<Rational, long>> out;
    out.reserve(segments_.size());
    // Slopes increase, so -slope decreases; report ascending valuation.
    for (auto it = segments_.rbegin(); it != segments_.rend(); ++it)
        out.emplace_back(-it->slope, it->length);
    return out;
}

Rational NewtonPolygon::max_root_valuation() const {
    if (segments_.empty()) fail(errc::invalid_argument, "polygon has no segments");
    return -segments_.front().slope;
}

Rational NewtonPolygon::min_root_valuation() const {
    if (segments_.empty()) fail(errc::invalid_argument, "polygon has no segments");
    return -segments_.back().slope;
}

} // namespace vallab
