#pragma once

#include "qtop/scalar.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace qtop {

// Truncated formal series in 1/K: prefactor * sum_{0<=n<=order} c_n K^{-n}.
// Operations never report results beyond the minimum truncation order of
// their inputs; mixing orders records a provenance note.
class KSeries {
  public:
    explicit KSeries(int order, Prefactor pref = Prefactor::identity())
        : order_(order), pref_(std::move(pref)) {}

    static KSeries one(int order) {
        KSeries s(order);
        s.set(0, SymbolicScalar::one());
        return s;
    }
    static KSeries zero(int order) { return KSeries(order); }
    // exp(c / K) truncated: sum_r c^r / r! K^{-r}
    static KSeries exp_over_k(const SymbolicScalar& c, int order);
    // sin(pi s / K) / (pi s / K) = sum_r (-1)^r (pi s)^{2r} / (2r+1)! K^{-2r}
    static KSeries sinc(const Rat& s, int order);

    int order() const { return order_; }
    const Prefactor& prefactor() const { return pref_; }
    const std::map<int, SymbolicScalar>& coeffs() const { return coeffs_; }
    SymbolicScalar coeff(int n) const;
    const std::optional<std::string>& provenance() const { return provenance_; }

    void set(int n, SymbolicScalar c);
    void add_to(int n, const SymbolicScalar& c);
    bool is_zero() const { return coeffs_.empty(); }

    KSeries truncated(int order) const;
    KSeries operator-() const;
    KSeries operator+(const KSeries& o) const;
    KSeries operator-(const KSeries& o) const;
    KSeries operator*(const KSeries& o) const;
    KSeries times(const SymbolicScalar& c) const;
    KSeries times_prefactor(const Prefactor& p) const;

    // Multiply by K^{+shift}. Upward shifts require the low coefficients to
    // vanish and lose that many orders of truncation.
    KSeries shift_k(long shift) const;

    // Fold every even part of the prefactor (phases i^k, whole powers of 2,
    // whole powers of K, rho) into the coefficients. The result's prefactor
    // has octant/half2/halfK in {0,1} and rho = 1.
    KSeries canonical() const;
    // canonical() + require the folded prefactor to be exactly trivial
    KSeries canonical_trivial() const;

    bool equals(const KSeries& o) const; // compares canonical forms

    std::string str() const;

  private:
    int order_;
    std::map<int, SymbolicScalar> coeffs_; // 0 <= n <= order, no zeros
    Prefactor pref_;
    std::optional<std::string> provenance_;
    friend KSeries series_exp(const KSeries&);
    friend KSeries series_log(const KSeries&);
};

// Formal exp: requires trivial prefactor.
KSeries series_exp(const KSeries& s);
// Formal log: requires constant term 1 and trivial prefactor.
KSeries series_log(const KSeries& s);

// S_n = (log d)_n / (i pi)^n for n = 1..order; every S_n must be rational.
std::vector<Rat> sn_from_delta(const KSeries& delta);
// Inverse: delta = exp(sum S_n (i pi / K)^n).
KSeries delta_from_sn(const std::vector<Rat>& s, int order);

// Coefficients lambda_n of the (e^{2 pi i/K} - 1)-expansion of s, obtained by
// composing with the reversion of zeta - 1 = sum_{m>=1} (2 pi i/K)^m / m!.
// Every lambda_n must be rational.
std::vector<Rat> change_variable_to_zeta(const KSeries& s, int order);
// Build the series (pi/K)/sin(pi/K) * exp(sum S_n (i pi/K)^n).
KSeries ohtsuki_generating_series(const std::vector<Rat>& s, int order);

} // namespace qtop
