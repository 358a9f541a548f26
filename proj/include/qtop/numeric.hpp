#pragma once

#include "qtop/kseries.hpp"
#include "qtop/scalar.hpp"

#include <mpfr.h>

#include <string>

namespace qtop {

// High-precision real, RAII over mpfr_t. Used only for numeric *rendering*
// and test-side cross-checks; the exact core never touches it.
class BigFloat {
  public:
    static constexpr mpfr_prec_t kPrec = 320;

    BigFloat() { mpfr_init2(v_, kPrec); mpfr_set_zero(v_, 1); }
    BigFloat(const BigFloat& o) { mpfr_init2(v_, kPrec); mpfr_set(v_, o.v_, MPFR_RNDN); }
    BigFloat(BigFloat&& o) noexcept { mpfr_init2(v_, kPrec); mpfr_swap(v_, o.v_); }
    explicit BigFloat(long n) { mpfr_init2(v_, kPrec); mpfr_set_si(v_, n, MPFR_RNDN); }
    explicit BigFloat(const Rat& q) {
        mpfr_init2(v_, kPrec);
        mpfr_set_q(v_, q.get_mpq_t(), MPFR_RNDN);
    }
    ~BigFloat() { mpfr_clear(v_); }
    BigFloat& operator=(BigFloat o) {
        mpfr_swap(v_, o.v_);
        return *this;
    }

    static BigFloat pi() {
        BigFloat r;
        mpfr_const_pi(r.v_, MPFR_RNDN);
        return r;
    }

    BigFloat operator-() const { BigFloat r; mpfr_neg(r.v_, v_, MPFR_RNDN); return r; }
    BigFloat operator+(const BigFloat& o) const { BigFloat r; mpfr_add(r.v_, v_, o.v_, MPFR_RNDN); return r; }
    BigFloat operator-(const BigFloat& o) const { BigFloat r; mpfr_sub(r.v_, v_, o.v_, MPFR_RNDN); return r; }
    BigFloat operator*(const BigFloat& o) const { BigFloat r; mpfr_mul(r.v_, v_, o.v_, MPFR_RNDN); return r; }
    BigFloat operator/(const BigFloat& o) const { BigFloat r; mpfr_div(r.v_, v_, o.v_, MPFR_RNDN); return r; }
    BigFloat& operator+=(const BigFloat& o) { mpfr_add(v_, v_, o.v_, MPFR_RNDN); return *this; }
    BigFloat& operator-=(const BigFloat& o) { mpfr_sub(v_, v_, o.v_, MPFR_RNDN); return *this; }
    BigFloat& operator*=(const BigFloat& o) { mpfr_mul(v_, v_, o.v_, MPFR_RNDN); return *this; }

    BigFloat abs() const { BigFloat r; mpfr_abs(r.v_, v_, MPFR_RNDN); return r; }
    BigFloat sqrt() const { BigFloat r; mpfr_sqrt(r.v_, v_, MPFR_RNDN); return r; }
    BigFloat sin() const { BigFloat r; mpfr_sin(r.v_, v_, MPFR_RNDN); return r; }
    BigFloat cos() const { BigFloat r; mpfr_cos(r.v_, v_, MPFR_RNDN); return r; }
    BigFloat exp() const { BigFloat r; mpfr_exp(r.v_, v_, MPFR_RNDN); return r; }
    BigFloat pow_si(long e) const { BigFloat r; mpfr_pow_si(r.v_, v_, e, MPFR_RNDN); return r; }

    bool operator<(const BigFloat& o) const { return mpfr_cmp(v_, o.v_) < 0; }
    bool operator>(const BigFloat& o) const { return mpfr_cmp(v_, o.v_) > 0; }

    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    std::string str(int digits = 30) const;

  private:
    mpfr_t v_;
};

struct BigComplex {
    BigFloat re, im;

    BigComplex() = default;
    BigComplex(BigFloat r, BigFloat i) : re(std::move(r)), im(std::move(i)) {}
    explicit BigComplex(const GaussQ& g) : re(g.re), im(g.im) {}

    static BigComplex unit_phase(const BigFloat& angle) { return {angle.cos(), angle.sin()}; }

    BigComplex operator+(const BigComplex& o) const { return {re + o.re, im + o.im}; }
    BigComplex operator-(const BigComplex& o) const { return {re - o.re, im - o.im}; }
    BigComplex operator*(const BigComplex& o) const {
        return {re * o.re - im * o.im, re * o.im + im * o.re};
    }
    BigComplex operator*(const BigFloat& s) const { return {re * s, im * s}; }
    BigComplex operator/(const BigComplex& o) const {
        BigFloat n = o.re * o.re + o.im * o.im;
        BigComplex num = *this * BigComplex{o.re, -o.im};
        return {num.re / n, num.im / n};
    }

    BigFloat abs() const { return (re * re + im * im).sqrt(); }
    std::string str(int digits = 30) const;
};

// numeric value with the formal pi substituted
BigComplex eval_numeric(const SymbolicScalar& s);
// numeric value of a prefactor at a concrete K
BigComplex eval_numeric(const Prefactor& p, long K);
// numeric value prefactor * sum c_n K^{-n} at a concrete K
BigComplex eval_numeric(const KSeries& s, long K);

std::string approx_string(const SymbolicScalar& s, int digits = 20);

} // namespace qtop
