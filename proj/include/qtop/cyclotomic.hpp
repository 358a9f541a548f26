#pragma once

#include "qtop/numeric.hpp"
#include "qtop/rational.hpp"

#include <memory>
#include <string>
#include <vector>

namespace qtop {

// The cyclotomic field of order D: Q[x]/Phi_D(x), canonical power basis
// 1, z, ..., z^{phi(D)-1} with z a fixed primitive D-th root of unity.
class CycField {
  public:
    static std::shared_ptr<const CycField> get(long order);

    long order() const { return order_; }
    long dim() const { return dim_; }
    // coordinates of z^e (e arbitrary integer) in the canonical basis
    const std::vector<Int>& power_row(long e) const;

  private:
    explicit CycField(long order);
    long order_;
    long dim_;
    std::vector<Int> phi_poly_;               // monic, ascending, degree dim_
    std::vector<std::vector<Int>> power_rows_; // x^j mod Phi for j in [0, max)
};

class CycNumber {
  public:
    CycNumber() = default;
    explicit CycNumber(std::shared_ptr<const CycField> f)
        : field_(std::move(f)), coords_(field_->dim(), Rat(0)) {}

    static CycNumber zero(std::shared_ptr<const CycField> f) { return CycNumber(std::move(f)); }
    static CycNumber one(std::shared_ptr<const CycField> f);
    static CycNumber zeta_pow(std::shared_ptr<const CycField> f, long e);
    static CycNumber from_rat(std::shared_ptr<const CycField> f, const Rat& r);

    const std::shared_ptr<const CycField>& field() const { return field_; }
    const RatVec& coords() const { return coords_; }
    bool is_zero() const;

    CycNumber operator-() const;
    CycNumber operator+(const CycNumber& o) const;
    CycNumber operator-(const CycNumber& o) const;
    CycNumber operator*(const CycNumber& o) const;
    CycNumber& operator+=(const CycNumber& o) { return *this = *this + o; }
    CycNumber& operator*=(const CycNumber& o) { return *this = *this * o; }
    CycNumber times(const Rat& r) const;
    bool operator==(const CycNumber& o) const;
    bool operator!=(const CycNumber& o) const { return !(*this == o); }

    // Galois automorphism z -> z^a, gcd(a, order) = 1
    CycNumber galois(long a) const;
    CycNumber conj() const { return galois(-1); }
    // exact multiplicative inverse (linear solve); throws on zero
    CycNumber inverse() const;

    // re-express in a field whose order is a multiple of this one's
    CycNumber embed(const std::shared_ptr<const CycField>& target) const;

    BigComplex eval_numeric() const;
    std::string str() const; // sparse "c*z^j" list

  private:
    std::shared_ptr<const CycField> field_;
    RatVec coords_;
};

// Arithmetic context at an odd prime K inside the order-8K field:
// hosts e^{i pi/4} = z^K, i = z^{2K}, e^{i pi/(2K)} = z^2, zeta_K = z^8.
class CycK {
  public:
    // throws input_error unless K is an odd prime <= kmax
    explicit CycK(long K, long kmax = kDefaultMaxK);
    static constexpr long kDefaultMaxK = 23;

    long K() const { return K_; }
    const std::shared_ptr<const CycField>& field() const { return field_; }

    CycNumber zero() const { return CycNumber::zero(field_); }
    CycNumber one() const { return CycNumber::one(field_); }
    CycNumber from_rat(const Rat& r) const { return CycNumber::from_rat(field_, r); }
    CycNumber i() const { return CycNumber::zeta_pow(field_, 2 * K_); }
    // e^{i pi k/4}
    CycNumber octant(long k) const { return CycNumber::zeta_pow(field_, K_ * k); }
    // e^{i pi e/(2K)}
    CycNumber exp_i_pi_over_2K(long e) const { return CycNumber::zeta_pow(field_, 2 * e); }
    // e^{i pi e/K}
    CycNumber exp_i_pi_over_K(long e) const { return CycNumber::zeta_pow(field_, 4 * e); }
    // e^{2 pi i e/K}
    CycNumber zetaK_pow(long e) const { return CycNumber::zeta_pow(field_, 8 * e); }
    CycNumber sin_pi_n_over_K(long n) const;
    CycNumber sqrt2() const;
    // the positive square root of K, realized through the quadratic Gauss sum
    CycNumber sqrtK() const;
    // quantum integer [n] = sin(pi n/K)/sin(pi/K) as a Chebyshev sum
    CycNumber bracket(long n) const;
    // sin(pi a b/K)/sin(pi b/K) = sum_{k<a} z^{4b(a-1-2k)}, a >= 0
    CycNumber bracket_ratio(long a, long b) const;

  private:
    long K_;
    std::shared_ptr<const CycField> field_;
};

int legendre(long p, long K);
// (p/q)^vee = p q^* mod K with q q^* = 1 mod K; result in [0, K)
long vee(long p, long q, long K);
long vee(const Rat& x, long K);

CycNumber gauss_sum_direct(long p, long q, long n, const CycK& ctx);
CycNumber gauss_sum_closed(long p, long q, long n, const CycK& ctx);

// Unique integers a_0..a_{K-2} with z = sum a_n (zeta_K - 1)^n, for z in the
// subring Z[zeta_K] of a field of order divisible by K. Throws math_error
// ("not in Z[zeta_K]") if z is outside the subfield or has non-integer
// coordinates.
std::vector<Int> zeta_minus_one_expand(const CycNumber& z, long K);

} // namespace qtop
