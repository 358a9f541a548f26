#include "qtop/kseries.hpp"

#include "qtop/errors.hpp"

#include <sstream>

namespace qtop {

KSeries KSeries::exp_over_k(const SymbolicScalar& c, int order) {
    KSeries s(order);
    SymbolicScalar pow = SymbolicScalar::one();
    Rat fact(1);
    for (int r = 0; r <= order; ++r) {
        if (r > 0) {
            pow *= c;
            fact *= r;
        }
        s.add_to(r, pow.times_rat(Rat(1 / fact)));
    }
    return s;
}

KSeries KSeries::sinc(const Rat& sc, int order) {
    KSeries s(order);
    Rat s2 = sc * sc;
    Rat c(1);
    for (int r = 0; 2 * r <= order; ++r) {
        if (r > 0) c *= -s2 / Rat((2 * r) * (2 * r + 1));
        s.add_to(2 * r, SymbolicScalar::pi_power(2 * r, GaussQ(c)));
    }
    return s;
}

SymbolicScalar KSeries::coeff(int n) const {
    auto it = coeffs_.find(n);
    return it == coeffs_.end() ? SymbolicScalar::zero() : it->second;
}

void KSeries::set(int n, SymbolicScalar c) {
    if (n < 0 || n > order_) throw math_error("KSeries::set: index out of truncation range");
    if (c.is_zero())
        coeffs_.erase(n);
    else
        coeffs_[n] = std::move(c);
}

void KSeries::add_to(int n, const SymbolicScalar& c) {
    if (n > order_) return;
    if (n < 0) throw math_error("KSeries::add_to: negative index");
    auto it = coeffs_.find(n);
    if (it == coeffs_.end()) {
        if (!c.is_zero()) coeffs_[n] = c;
    } else {
        it->second += c;
        if (it->second.is_zero()) coeffs_.erase(it);
    }
}

KSeries KSeries::truncated(int order) const {
    KSeries r(order, pref_);
    r.provenance_ = provenance_;
    for (const auto& [n, c] : coeffs_)
        if (n <= order) r.coeffs_[n] = c;
    return r;
}

KSeries KSeries::operator-() const {
    KSeries r(order_, pref_);
    r.provenance_ = provenance_;
    for (const auto& [n, c] : coeffs_) r.coeffs_[n] = -c;
    return r;
}

namespace {
std::optional<std::string> mix_note(const KSeries& a, const KSeries& b) {
    if (a.order() != b.order()) {
        std::ostringstream os;
        os << "order clipped to " << std::min(a.order(), b.order()) << " from (" << a.order()
           << ", " << b.order() << ")";
        return os.str();
    }
    if (a.provenance()) return a.provenance();
    return b.provenance();
}
} // namespace

KSeries KSeries::operator+(const KSeries& o) const {
    if (is_zero()) {
        KSeries r = o.truncated(std::min(order_, o.order_));
        return r;
    }
    if (o.is_zero()) return truncated(std::min(order_, o.order_));
    if (pref_ != o.pref_)
        throw math_error("KSeries addition requires identical prefactors; canonicalize first");
    KSeries r = truncated(std::min(order_, o.order_));
    r.provenance_ = mix_note(*this, o);
    for (const auto& [n, c] : o.coeffs_)
        if (n <= r.order_) r.add_to(n, c);
    return r;
}

KSeries KSeries::operator-(const KSeries& o) const { return *this + (-o); }

KSeries KSeries::operator*(const KSeries& o) const {
    KSeries r(std::min(order_, o.order_), pref_ * o.pref_);
    r.provenance_ = mix_note(*this, o);
    for (const auto& [n1, c1] : coeffs_) {
        if (n1 > r.order_) break;
        for (const auto& [n2, c2] : o.coeffs_) {
            if (n1 + n2 > r.order_) break;
            r.add_to(n1 + n2, c1 * c2);
        }
    }
    return r;
}

KSeries KSeries::times(const SymbolicScalar& c) const {
    KSeries r(order_, pref_);
    r.provenance_ = provenance_;
    if (c.is_zero()) return r;
    for (const auto& [n, t] : coeffs_) r.coeffs_[n] = t * c;
    return r;
}

KSeries KSeries::times_prefactor(const Prefactor& p) const {
    KSeries r = *this;
    r.pref_ = pref_ * p;
    return r;
}

KSeries KSeries::shift_k(long shift) const {
    if (shift == 0) return *this;
    if (shift > 0) {
        for (long n = 0; n < shift; ++n)
            if (!coeff((int)n).is_zero())
                throw math_error("KSeries::shift_k: positive power of K would appear");
        if (order_ - shift < 0) throw math_error("KSeries::shift_k: truncation exhausted");
        KSeries r((int)(order_ - shift), pref_);
        r.provenance_ = provenance_;
        for (const auto& [n, c] : coeffs_)
            if (n >= shift) r.coeffs_[(int)(n - shift)] = c;
        return r;
    }
    KSeries r((int)(order_ - shift), pref_);
    r.provenance_ = provenance_;
    for (const auto& [n, c] : coeffs_) r.coeffs_[(int)(n - shift)] = c;
    return r;
}

KSeries KSeries::canonical() const {
    PrefactorFold f = fold_even(pref_);
    KSeries r(order_, Prefactor::identity());
    r.provenance_ = provenance_;
    SymbolicScalar sc = SymbolicScalar::pi_power(0, f.scalar);
    for (const auto& [n, c] : coeffs_) r.coeffs_[n] = c * sc;
    r.pref_ = Prefactor::identity();
    r = r.shift_k(f.k_shift);
    r.pref_ = f.residue;
    return r;
}

KSeries KSeries::canonical_trivial() const {
    KSeries r = canonical();
    if (!r.pref_.is_trivial())
        throw math_error("prefactor fails to cancel: residue " + r.pref_.str());
    return r;
}

bool KSeries::equals(const KSeries& o) const {
    KSeries a = canonical();
    KSeries b = o.canonical();
    int ord = std::min(a.order_, b.order_);
    if (!(a.pref_ == b.pref_)) {
        // Zero series compare equal regardless of prefactor.
        if (a.is_zero() && b.is_zero()) return true;
        return false;
    }
    for (int n = 0; n <= ord; ++n)
        if (a.coeff(n) != b.coeff(n)) return false;
    return true;
}

std::string KSeries::str() const {
    std::ostringstream os;
    os << "[" << pref_.str() << "] (";
    bool first = true;
    for (const auto& [n, c] : coeffs_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.str() << ")";
        if (n > 0) os << "*K^-" << n;
    }
    if (first) os << "0";
    os << ")";
    return os.str();
}

KSeries series_exp(const KSeries& s) {
    if (!s.prefactor().is_trivial()) throw math_error("series_exp: prefactor must be trivial");
    const int ord = s.order();
    KSeries r = KSeries::one(ord);
    KSeries pow = KSeries::one(ord);
    Rat fact(1);
    for (int k = 1; k <= ord; ++k) {
        pow = pow * s;
        fact *= k;
        KSeries term = pow.times(SymbolicScalar(Rat(1 / fact)));
        for (const auto& [n, c] : term.coeffs()) r.add_to(n, c);
    }
    // exp(c0) for a nonzero constant term is not representable
    if (!s.coeff(0).is_zero()) throw math_error("series_exp: nonzero constant term");
    return r;
}

KSeries series_log(const KSeries& s) {
    if (!s.prefactor().is_trivial()) throw math_error("series_log: prefactor must be trivial");
    if (!(s.coeff(0) == SymbolicScalar::one()))
        throw math_error("series_log: constant term must be 1");
    const int ord = s.order();
    KSeries y = s;
    y.add_to(0, -SymbolicScalar::one());
    KSeries r = KSeries::zero(ord);
    KSeries pow = KSeries::one(ord);
    for (int k = 1; k <= ord; ++k) {
        pow = pow * y;
        Rat c = Rat((k % 2) ? 1 : -1, k); // (-1)^{k+1}/k
        KSeries term = pow.times(SymbolicScalar(c));
        for (const auto& [n, cf] : term.coeffs()) r.add_to(n, cf);
    }
    return r;
}

std::vector<Rat> sn_from_delta(const KSeries& delta) {
    KSeries d = delta.canonical_trivial();
    if (!(d.coeff(0) == SymbolicScalar::one()))
        throw math_error("sn_from_delta: Delta_0 must be 1, got " + d.coeff(0).str());
    KSeries lg = series_log(d);
    std::vector<Rat> s;
    for (int n = 1; n <= d.order(); ++n) {
        SymbolicScalar v = lg.coeff(n).div_i_pi(n);
        if (!v.is_rational())
            throw math_error("pi-cancellation failure at S_" + std::to_string(n) + ": " + v.str());
        s.push_back(v.as_rational());
    }
    return s;
}

KSeries delta_from_sn(const std::vector<Rat>& s, int order) {
    KSeries e = KSeries::zero(order);
    for (size_t n = 1; n <= s.size() && (int)n <= order; ++n)
        e.add_to((int)n, SymbolicScalar::i_pi_power((int)n, s[n - 1]));
    return series_exp(e);
}

namespace {

// zeta - 1 as a series in v = 1/K: sum_{m>=1} (2 pi i)^m/m! v^m
KSeries zeta_minus_one_in_v(int order) {
    KSeries u(order);
    SymbolicScalar two_pi_i = SymbolicScalar::pi_power(1, GaussQ(Rat(0), Rat(2)));
    SymbolicScalar pow = SymbolicScalar::one();
    Rat fact(1);
    for (int m = 1; m <= order; ++m) {
        pow *= two_pi_i;
        fact *= m;
        u.set(m, pow.times_rat(Rat(1 / fact)));
    }
    return u;
}

// composition a(b(v)) for series with zero constant term b
KSeries compose(const KSeries& a, const KSeries& b) {
    if (!b.coeff(0).is_zero()) throw math_error("compose: inner constant term must vanish");
    int ord = std::min(a.order(), b.order());
    KSeries r = KSeries::zero(ord);
    r.add_to(0, a.coeff(0));
    KSeries pow = KSeries::one(ord);
    for (int k = 1; k <= ord; ++k) {
        pow = pow * b;
        KSeries term = pow.times(a.coeff(k));
        for (const auto& [n, c] : term.coeffs()) r.add_to(n, c);
    }
    return r;
}

// reversion: given u(v) with u(0)=0, u'(0) != 0, find v(u) with u(v(u)) = u
KSeries revert(const KSeries& u) {
    int ord = u.order();
    if (!u.coeff(0).is_zero()) throw math_error("revert: constant term must vanish");
    SymbolicScalar u1 = u.coeff(1);
    if (u1.is_zero()) throw math_error("revert: linear coefficient must be nonzero");
    // v = sum c_m u^m solved order by order
    KSeries v = KSeries::zero(ord);
    // c_1 = 1/u_1; u_1 is of the form (i pi) * rational here, invert explicitly
    // generic inverse: u1 = pi^d * g, inverse = pi^-d / g
    const auto& t = u1.terms();
    if (t.size() != 1) throw math_error("revert: linear coefficient must be a pi-monomial");
    int d = t.begin()->first;
    GaussQ g = t.begin()->second;
    SymbolicScalar inv_u1 = SymbolicScalar::pi_power(-d, GaussQ(Rat(1)) / g);
    v.set(1, inv_u1);
    for (int m = 2; m <= ord; ++m) {
        // coefficient of u^m in u(v(u)) must vanish
        KSeries comp = compose(u, v);
        SymbolicScalar excess = comp.coeff(m);
        v.set(m, -(excess * inv_u1));
    }
    return v;
}

} // namespace

std::vector<Rat> change_variable_to_zeta(const KSeries& s, int order) {
    KSeries sv = s.canonical_trivial().truncated(order);
    KSeries u = zeta_minus_one_in_v(order);
    KSeries v_of_u = revert(u);
    KSeries lam = compose(sv, v_of_u);
    std::vector<Rat> out;
    for (int n = 0; n <= order; ++n) {
        SymbolicScalar c = lam.coeff(n);
        if (!c.is_rational())
            throw math_error("non-rational lambda_" + std::to_string(n) + ": " + c.str());
        out.push_back(c.as_rational());
    }
    return out;
}

KSeries ohtsuki_generating_series(const std::vector<Rat>& s, int order) {
    // (pi/K)/sin(pi/K) = 1/sinc(1)
    KSeries sinc = KSeries::sinc(Rat(1), order);
    // reciprocal via log/exp-free direct division: r * sinc = 1
    KSeries r = KSeries::one(order);
    KSeries acc = KSeries::one(order);
    // Newton-free: r = sum_{k} (1 - sinc)^k
    KSeries y = KSeries::one(order) - sinc;
    for (int k = 1; k <= order; ++k) {
        acc = acc * y;
        r = r + acc;
    }
    return r * delta_from_sn(s, order);
}

} // namespace qtop
