#include "qtop/scalar.hpp"

#include "qtop/errors.hpp"

#include <sstream>

namespace qtop {

GaussQ GaussQ::operator/(const GaussQ& o) const {
    if (o.is_zero()) throw math_error("GaussQ: division by zero");
    Rat n = o.re * o.re + o.im * o.im;
    GaussQ num = *this * o.conj();
    return {Rat(num.re / n), Rat(num.im / n)};
}

GaussQ GaussQ::i_power(long k) {
    long r = ((k % 4) + 4) % 4;
    switch (r) {
        case 0: return GaussQ(Rat(1));
        case 1: return GaussQ(Rat(0), Rat(1));
        case 2: return GaussQ(Rat(-1));
        default: return GaussQ(Rat(0), Rat(-1));
    }
}

std::string GaussQ::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    if (im == 0) {
        os << rat_str(re);
    } else if (re == 0) {
        if (im == 1)
            os << "i";
        else if (im == -1)
            os << "-i";
        else
            os << rat_str(im) << "*i";
    } else {
        os << rat_str(re);
        if (im > 0)
            os << " + " << (im == 1 ? "i" : rat_str(im) + "*i");
        else
            os << " - " << (im == -1 ? "i" : rat_str(Rat(-im)) + "*i");
    }
    return os.str();
}

void SymbolicScalar::set_term(int d, GaussQ c) {
    if (c.is_zero())
        terms_.erase(d);
    else
        terms_[d] = std::move(c);
}

SymbolicScalar SymbolicScalar::pi_power(int d, GaussQ c) {
    SymbolicScalar s;
    s.set_term(d, std::move(c));
    return s;
}

SymbolicScalar SymbolicScalar::i_pi_power(int n, Rat c) {
    return pi_power(n, GaussQ::i_power(n) * GaussQ(std::move(c)));
}

bool SymbolicScalar::is_rational() const {
    if (terms_.empty()) return true;
    if (terms_.size() != 1) return false;
    const auto& [d, c] = *terms_.begin();
    return d == 0 && c.im == 0;
}

Rat SymbolicScalar::as_rational() const {
    if (!is_rational()) throw math_error("SymbolicScalar is not rational: " + str());
    if (terms_.empty()) return Rat(0);
    return terms_.begin()->second.re;
}

GaussQ SymbolicScalar::coeff(int d) const {
    auto it = terms_.find(d);
    return it == terms_.end() ? GaussQ() : it->second;
}

SymbolicScalar SymbolicScalar::operator-() const {
    SymbolicScalar r;
    for (const auto& [d, c] : terms_) r.terms_[d] = -c;
    return r;
}

SymbolicScalar SymbolicScalar::operator+(const SymbolicScalar& o) const {
    SymbolicScalar r(*this);
    for (const auto& [d, c] : o.terms_) {
        auto it = r.terms_.find(d);
        if (it == r.terms_.end()) {
            r.terms_[d] = c;
        } else {
            GaussQ s = it->second + c;
            if (s.is_zero())
                r.terms_.erase(it);
            else
                it->second = s;
        }
    }
    return r;
}

SymbolicScalar SymbolicScalar::operator-(const SymbolicScalar& o) const { return *this + (-o); }

SymbolicScalar SymbolicScalar::operator*(const SymbolicScalar& o) const {
    SymbolicScalar r;
    for (const auto& [d1, c1] : terms_)
        for (const auto& [d2, c2] : o.terms_) {
            int d = d1 + d2;
            GaussQ prod = c1 * c2;
            auto it = r.terms_.find(d);
            if (it == r.terms_.end()) {
                if (!prod.is_zero()) r.terms_[d] = prod;
            } else {
                GaussQ s = it->second + prod;
                if (s.is_zero())
                    r.terms_.erase(it);
                else
                    it->second = s;
            }
        }
    return r;
}

SymbolicScalar SymbolicScalar::times(const GaussQ& c) const {
    SymbolicScalar r;
    if (c.is_zero()) return r;
    for (const auto& [d, t] : terms_) r.terms_[d] = t * c;
    return r;
}

SymbolicScalar SymbolicScalar::shift_pi(int d) const {
    SymbolicScalar r;
    for (const auto& [e, c] : terms_) r.terms_[e + d] = c;
    return r;
}

SymbolicScalar SymbolicScalar::div(const GaussQ& c) const {
    if (c.is_zero()) throw math_error("SymbolicScalar: division by zero");
    SymbolicScalar r;
    for (const auto& [d, t] : terms_) r.terms_[d] = t / c;
    return r;
}

SymbolicScalar SymbolicScalar::div_i_pi(int n) const {
    return shift_pi(-n).div(GaussQ::i_power(n));
}

SymbolicScalar SymbolicScalar::conj() const {
    SymbolicScalar r;
    for (const auto& [d, c] : terms_) r.terms_[d] = c.conj();
    return r;
}

std::string SymbolicScalar::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [d, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        bool composite = c.re != 0 && c.im != 0;
        if (d == 0) {
            os << c.str();
            continue;
        }
        if (composite)
            os << "(" << c.str() << ")";
        else if (c == GaussQ(Rat(1)))
            ; // bare pi power
        else if (c == GaussQ(Rat(-1)))
            os << "-";
        else
            os << c.str() << "*";
        os << "pi";
        if (d != 1) os << "^" << d;
    }
    return os.str();
}

Prefactor::Prefactor(int octant, long half2, long halfK, Rat radicand, Rat rho)
    : octant_(((octant % 8) + 8) % 8),
      half2_(half2),
      halfK_(halfK),
      radicand_(std::move(radicand)),
      rho_(std::move(rho)) {
    radicand_.canonicalize();
    rho_.canonicalize();
    if (radicand_ <= 0) throw math_error("Prefactor: radicand must be positive");
    if (rho_ <= 0) throw math_error("Prefactor: rho must be positive");
    reduce();
}

Prefactor Prefactor::raw_unchecked(int octant, long half2, long halfK, Rat radicand, Rat rho) {
    Prefactor p;
    p.octant_ = ((octant % 8) + 8) % 8;
    p.half2_ = half2;
    p.halfK_ = halfK;
    p.radicand_ = std::move(radicand);
    p.rho_ = std::move(rho);
    return p;
}

void Prefactor::reduce() {
    radicand_.canonicalize();
    Int sn, fn, sd, fd;
    extract_square(radicand_.get_num(), sn, fn);
    extract_square(radicand_.get_den(), sd, fd);
    // a/b = (sn^2 fn)/(sd^2 fd) = (sn/(sd fd))^2 * fn fd, so the reduced
    // radicand is the squarefree integer fn*fd.
    rho_ *= Rat(sn) / Rat(sd * fd);
    radicand_ = Rat(fn * fd);
    // keep the radicand odd: its factor of 2 is one unit of half2
    if (radicand_.get_num() % 2 == 0) {
        radicand_ /= 2;
        half2_ += 1;
    }
    // canonical half2 is 0 or 1: sqrt(2)-content beyond that lives in rho
    while (half2_ >= 2) {
        rho_ *= 2;
        half2_ -= 2;
    }
    while (half2_ < 0) {
        rho_ /= 2;
        half2_ += 2;
    }
    rho_.canonicalize();
}

Prefactor Prefactor::operator*(const Prefactor& o) const {
    return Prefactor(octant_ + o.octant_, half2_ + o.half2_, halfK_ + o.halfK_,
                     Rat(radicand_ * o.radicand_), Rat(rho_ * o.rho_));
}

Prefactor Prefactor::inverse() const {
    return Prefactor(-octant_, -half2_, -halfK_, Rat(1 / radicand_), Rat(1 / rho_));
}

bool Prefactor::operator==(const Prefactor& o) const {
    return octant_ == o.octant_ && half2_ == o.half2_ && halfK_ == o.halfK_ &&
           radicand_ == o.radicand_ && rho_ == o.rho_;
}

bool Prefactor::is_trivial() const {
    Int s, f;
    extract_square(radicand_.get_num(), s, f);
    if (s != 1) throw math_error("Prefactor invariant violation: radicand not square-reduced");
    extract_square(radicand_.get_den(), s, f);
    if (s != 1) throw math_error("Prefactor invariant violation: radicand not square-reduced");
    return octant_ == 0 && half2_ == 0 && halfK_ == 0 && radicand_ == 1 && rho_ == 1;
}

std::string Prefactor::str() const {
    std::ostringstream os;
    os << "octant=" << octant_ << " half2=" << half2_ << " halfK=" << halfK_
       << " radicand=" << rat_str(radicand_) << " rho=" << rat_str(rho_);
    return os.str();
}

PrefactorFold fold_even(const Prefactor& p) {
    PrefactorFold f;
    long oct = p.octant();
    long i_pow = oct / 2;
    int oct_res = oct % 2;
    long h2 = p.half2();
    long two_pow = (h2 >= 0) ? h2 / 2 : -((-h2 + 1) / 2);
    int h2_res = (int)(h2 - 2 * two_pow);
    long hk = p.halfK();
    long k_shift = (hk >= 0) ? hk / 2 : -((-hk + 1) / 2);
    int hk_res = (int)(hk - 2 * k_shift);
    f.scalar = GaussQ::i_power(i_pow) * GaussQ(Rat(rat_pow(Rat(2), two_pow) * p.rho()));
    f.k_shift = k_shift;
    f.residue = Prefactor(oct_res, h2_res, hk_res, p.radicand(), Rat(1));
    return f;
}

} // namespace qtop
