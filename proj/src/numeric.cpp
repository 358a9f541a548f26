#include "qtop/numeric.hpp"

#include <cstdio>
#include <vector>

namespace qtop {

std::string BigFloat::str(int digits) const {
    char buf[256];
    mpfr_snprintf(buf, sizeof buf, "%.*Rg", digits, v_);
    return buf;
}

std::string BigComplex::str(int digits) const {
    return re.str(digits) + " + " + im.str(digits) + "i";
}

BigComplex eval_numeric(const SymbolicScalar& s) {
    BigFloat pi = BigFloat::pi();
    BigComplex acc{BigFloat(0L), BigFloat(0L)};
    for (const auto& [d, c] : s.terms()) {
        BigFloat p = pi.pow_si(d);
        acc = acc + BigComplex(c) * p;
    }
    return acc;
}

BigComplex eval_numeric(const Prefactor& p, long K) {
    BigFloat pi = BigFloat::pi();
    BigFloat angle = pi * BigFloat(p.octant()) / BigFloat(4L);
    BigComplex phase = BigComplex::unit_phase(angle);
    BigFloat mag = BigFloat(p.rho());
    mag *= BigFloat(p.radicand()).sqrt();
    mag *= BigFloat(2L).sqrt().pow_si(p.half2());
    mag *= BigFloat(K).sqrt().pow_si(p.halfK());
    return phase * mag;
}

BigComplex eval_numeric(const KSeries& s, long K) {
    BigComplex acc{BigFloat(0L), BigFloat(0L)};
    BigFloat invK = BigFloat(1L) / BigFloat(K);
    for (const auto& [n, c] : s.coeffs()) acc = acc + eval_numeric(c) * invK.pow_si(n);
    return acc * eval_numeric(s.prefactor(), K);
}

std::string approx_string(const SymbolicScalar& s, int digits) {
    BigComplex v = eval_numeric(s);
    return "approx " + v.re.str(digits) + " + " + v.im.str(digits) + "*i";
}

} // namespace qtop
