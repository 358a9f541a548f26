#pragma once

#include "qtop/rational.hpp"

#include <map>
#include <string>

namespace qtop {

// Gaussian rational a + b i.
struct GaussQ {
    Rat re{0}, im{0};

    GaussQ() = default;
    GaussQ(Rat r) : re(std::move(r)) { re.canonicalize(); }
    GaussQ(Rat r, Rat i) : re(std::move(r)), im(std::move(i)) {
        re.canonicalize();
        im.canonicalize();
    }

    bool is_zero() const { return re == 0 && im == 0; }
    GaussQ conj() const { return {re, Rat(-im)}; }

    GaussQ operator-() const { return {Rat(-re), Rat(-im)}; }
    GaussQ operator+(const GaussQ& o) const { return {Rat(re + o.re), Rat(im + o.im)}; }
    GaussQ operator-(const GaussQ& o) const { return {Rat(re - o.re), Rat(im - o.im)}; }
    GaussQ operator*(const GaussQ& o) const {
        return {Rat(re * o.re - im * o.im), Rat(re * o.im + im * o.re)};
    }
    GaussQ operator/(const GaussQ& o) const;
    bool operator==(const GaussQ& o) const { return re == o.re && im == o.im; }
    bool operator!=(const GaussQ& o) const { return !(*this == o); }

    static GaussQ i_power(long k);

    std::string str() const;
};

// Exact number of the form sum_d c_d pi^d with Gaussian-rational c_d,
// the coefficient field of every series in the library. pi is formal:
// no floating-point value exists here.
class SymbolicScalar {
  public:
    SymbolicScalar() = default;
    explicit SymbolicScalar(Rat r) { set_term(0, GaussQ(std::move(r))); }
    SymbolicScalar(long n) { set_term(0, GaussQ(Rat(n))); }

    static SymbolicScalar zero() { return SymbolicScalar(); }
    static SymbolicScalar one() { return SymbolicScalar(Rat(1)); }
    static SymbolicScalar pi_power(int d, GaussQ c = GaussQ(Rat(1)));
    static SymbolicScalar i_unit() { return pi_power(0, GaussQ(Rat(0), Rat(1))); }
    // (i pi)^n c
    static SymbolicScalar i_pi_power(int n, Rat c = Rat(1));

    bool is_zero() const { return terms_.empty(); }
    // true iff the value lies in Q: single pi^0 term with zero imaginary part
    bool is_rational() const;
    Rat as_rational() const; // throws math_error unless is_rational()

    const std::map<int, GaussQ>& terms() const { return terms_; }
    GaussQ coeff(int d) const;

    SymbolicScalar operator-() const;
    SymbolicScalar operator+(const SymbolicScalar& o) const;
    SymbolicScalar operator-(const SymbolicScalar& o) const;
    SymbolicScalar operator*(const SymbolicScalar& o) const;
    SymbolicScalar& operator+=(const SymbolicScalar& o) { return *this = *this + o; }
    SymbolicScalar& operator-=(const SymbolicScalar& o) { return *this = *this - o; }
    SymbolicScalar& operator*=(const SymbolicScalar& o) { return *this = *this * o; }

    SymbolicScalar times(const GaussQ& c) const;
    SymbolicScalar times_rat(const Rat& c) const { return times(GaussQ(c)); }
    // multiply by pi^d
    SymbolicScalar shift_pi(int d) const;
    // divide by c (exact), c != 0
    SymbolicScalar div(const GaussQ& c) const;
    // divide by (i pi)^n
    SymbolicScalar div_i_pi(int n) const;
    SymbolicScalar conj() const;

    bool operator==(const SymbolicScalar& o) const { return terms_ == o.terms_; }
    bool operator!=(const SymbolicScalar& o) const { return !(*this == o); }

    // canonical rendering, e.g. "1/6*pi^2", "1/2 + 1/3*i", "-3*pi^-1"
    std::string str() const;

  private:
    void set_term(int d, GaussQ c);
    std::map<int, GaussQ> terms_; // pi exponent -> coefficient, no zeros stored
};

// Radical/phase bookkeeping: e^{i pi octant/4} * 2^{half2/2} * K^{halfK/2}
// * sqrt(radicand) * rho. Absorbs everything Gaussian integration produces
// that a SymbolicScalar cannot hold.
class Prefactor {
  public:
    Prefactor() = default;
    Prefactor(int octant, long half2, long halfK, Rat radicand = Rat(1), Rat rho = Rat(1));

    static Prefactor identity() { return Prefactor(); }
    // bypasses radicand reduction; exists so tests can build invalid states
    static Prefactor raw_unchecked(int octant, long half2, long halfK, Rat radicand, Rat rho);

    Prefactor operator*(const Prefactor& o) const;
    Prefactor inverse() const;
    bool operator==(const Prefactor& o) const;
    bool operator!=(const Prefactor& o) const { return !(*this == o); }

    // throws math_error if the radicand is not square-reduced
    bool is_trivial() const;

    int octant() const { return octant_; }
    long half2() const { return half2_; }
    long halfK() const { return halfK_; }
    const Rat& radicand() const { return radicand_; }
    const Rat& rho() const { return rho_; }

    std::string str() const;

  private:
    void reduce();
    int octant_ = 0;       // power of e^{i pi/4}, mod 8
    long half2_ = 0;       // power of sqrt(2)
    long halfK_ = 0;       // power of sqrt(K)
    Rat radicand_{1};      // positive, square-reduced
    Rat rho_{1};           // positive rational
};

// Result of splitting a Prefactor into a foldable scalar part and an
// irreducible residue (octant/half2/halfK reduced mod 2, radicand kept).
struct PrefactorFold {
    GaussQ scalar;    // i^k 2^m rho
    long k_shift;     // multiply by K^{k_shift}
    Prefactor residue; // octant, half2, halfK in {0,1}; rho = 1
};

PrefactorFold fold_even(const Prefactor& p);

} // namespace qtop
