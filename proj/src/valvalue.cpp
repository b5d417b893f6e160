#include "vallab/valvalue.hpp"

#include <ostream>

namespace vallab {

std::ostream& operator<<(std::ostream& os, const ValValue& v) { return os << v.str(); }

void require_prime(const Integer& p) {
    if (p < 2 || mpz_probab_prime_p(p.get_mpz_t(), 40) == 0)
        fail(errc::invalid_argument, "not a prime: " + p.get_str());
}

static long remove_factor(Integer& n, const Integer& p) {
    Integer out;
    mp_bitcnt_t k = mpz_remove(out.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t());
    n = out;
    return static_cast<long>(k);
}

ValValue vp(const Integer& x, const Integer& p) {
    require_prime(p);
    if (sgn(x) == 0) return ValValue::infinity();
    Integer n = x;
    return ValValue(Rational(remove_factor(n, p)));
}

ValValue vp(const Rational& x, const Integer& p) {
    require_prime(p);
    if (x.is_zero()) return ValValue::infinity();
    Integer n = x.num(), d = x.den();
    long v = remove_factor(n, p) - remove_factor(d, p);
    return ValValue(Rational(v));
}

std::string AbsScale::str() const {
    if (kind == 0) return "0";
    if (kind == 1) return "1";
    return p.get_str() + "^(" + exponent.str() + ")";
}

AbsScale abs_scale(const ValValue& v, const Integer& p) {
    if (v.is_infinite()) return AbsScale{0, p, Rational(0)};
    if (v.finite().is_zero()) return AbsScale{1, p, Rational(0)};
    return AbsScale{2, p, -v.finite()};
}

} // namespace vallab
