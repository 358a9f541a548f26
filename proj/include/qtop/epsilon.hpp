#pragma once

#include "qtop/scalar.hpp"

#include <map>
#include <string>
#include <vector>

namespace qtop {

// Dense polynomial in the regularization parameter epsilon, ascending
// degree, no trailing zeros; the zero polynomial is the empty vector.
using QPoly = std::vector<Rat>;

QPoly qpoly_trim(QPoly p);
QPoly qpoly_add(const QPoly& a, const QPoly& b);
QPoly qpoly_neg(QPoly a);
QPoly qpoly_mul(const QPoly& a, const QPoly& b);
// exact division; throws if not divisible
QPoly qpoly_div_exact(const QPoly& num, const QPoly& den);
bool qpoly_divides(const QPoly& den, const QPoly& num);
QPoly qpoly_gcd(QPoly a, QPoly b); // monic
Rat qpoly_eval0(const QPoly& p);
std::string qpoly_str(const QPoly& p);

// Rational function in epsilon with rational coefficients. Normal form:
// gcd-reduced with monic denominator. Linking-matrix entries, pivots and
// radicands live here during epsilon-mode pipelines.
class QRat {
  public:
    QRat() : num_{}, den_{Rat(1)} {}
    QRat(const Rat& r);
    QRat(QPoly num, QPoly den);

    static QRat epsilon();

    const QPoly& num() const { return num_; }
    const QPoly& den() const { return den_; }
    bool is_zero() const { return num_.empty(); }
    // exactly a rational constant?
    bool is_constant() const { return num_.size() <= 1 && den_.size() == 1; }
    Rat constant() const;

    QRat operator-() const;
    QRat operator+(const QRat& o) const;
    QRat operator-(const QRat& o) const;
    QRat operator*(const QRat& o) const;
    QRat operator/(const QRat& o) const;
    bool operator==(const QRat& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const QRat& o) const { return !(*this == o); }

    // sign as epsilon -> 0^+ (sign of the lowest-order Laurent coefficient)
    int sign_near_zero() const;
    // |f| as eps -> 0^+, i.e. f * sign_near_zero
    QRat abs_near_zero() const;
    bool has_pole_at_zero() const;
    Rat limit0() const; // throws math_error on pole

    std::string str() const;

  private:
    void reduce();
    QPoly num_, den_;
};

// Scalar of the epsilon-extended coefficient field: a SymbolicScalar-valued
// polynomial in epsilon over a rational-polynomial denominator.
class EpsScalar {
  public:
    EpsScalar() : den_{Rat(1)} {}
    EpsScalar(const SymbolicScalar& s);
    EpsScalar(std::map<int, SymbolicScalar> num, QPoly den);

    static EpsScalar from_qrat(const QRat& q);

    bool is_zero() const { return num_.empty(); }
    const std::map<int, SymbolicScalar>& num() const { return num_; }
    const QPoly& den() const { return den_; }

    EpsScalar operator-() const;
    EpsScalar operator+(const EpsScalar& o) const;
    EpsScalar operator-(const EpsScalar& o) const;
    EpsScalar operator*(const EpsScalar& o) const;
    EpsScalar& operator+=(const EpsScalar& o) { return *this = *this + o; }
    EpsScalar& operator*=(const EpsScalar& o) { return *this = *this * o; }
    EpsScalar times(const SymbolicScalar& s) const;
    EpsScalar times_qrat(const QRat& q) const;
    bool operator==(const EpsScalar& o) const { return num_ == o.num_ && den_ == o.den_; }

    bool has_pole_at_zero() const;
    SymbolicScalar limit0() const; // throws math_error("singular presentation") on pole

    std::string str() const;

  private:
    void reduce();
    std::map<int, SymbolicScalar> num_; // eps degree -> coefficient, no zeros
    QPoly den_;                         // monic
};

} // namespace qtop
