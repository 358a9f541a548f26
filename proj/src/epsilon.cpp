#include "qtop/epsilon.hpp"

#include "qtop/errors.hpp"

#include <sstream>

namespace qtop {

QPoly qpoly_trim(QPoly p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
    return p;
}

QPoly qpoly_add(const QPoly& a, const QPoly& b) {
    QPoly r(std::max(a.size(), b.size()), Rat(0));
    for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    return qpoly_trim(std::move(r));
}

QPoly qpoly_neg(QPoly a) {
    for (Rat& c : a) c = -c;
    return a;
}

QPoly qpoly_mul(const QPoly& a, const QPoly& b) {
    if (a.empty() || b.empty()) return {};
    QPoly r(a.size() + b.size() - 1, Rat(0));
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    return qpoly_trim(std::move(r));
}

namespace {
// division with remainder; returns quotient, rem gets the remainder
QPoly qpoly_divmod(const QPoly& num, const QPoly& den, QPoly& rem) {
    if (den.empty()) throw math_error("qpoly division by zero");
    rem = num;
    if (num.size() < den.size()) return {};
    QPoly quot(num.size() - den.size() + 1, Rat(0));
    for (long d = (long)rem.size() - 1; d >= (long)den.size() - 1; --d) {
        if ((size_t)d >= rem.size() || rem[d] == 0) continue;
        Rat q = rem[d] / den.back();
        quot[d - (den.size() - 1)] = q;
        for (size_t k = 0; k < den.size(); ++k) rem[d - (den.size() - 1) + k] -= q * den[k];
    }
    rem = qpoly_trim(std::move(rem));
    return qpoly_trim(std::move(quot));
}
} // namespace

QPoly qpoly_div_exact(const QPoly& num, const QPoly& den) {
    QPoly rem;
    QPoly q = qpoly_divmod(num, den, rem);
    if (!rem.empty()) throw math_error("qpoly_div_exact: nonzero remainder");
    return q;
}

bool qpoly_divides(const QPoly& den, const QPoly& num) {
    if (num.empty()) return true;
    if (den.empty()) return false;
    QPoly rem;
    qpoly_divmod(num, den, rem);
    return rem.empty();
}

QPoly qpoly_gcd(QPoly a, QPoly b) {
    a = qpoly_trim(std::move(a));
    b = qpoly_trim(std::move(b));
    while (!b.empty()) {
        QPoly rem;
        qpoly_divmod(a, b, rem);
        a = std::move(b);
        b = std::move(rem);
    }
    if (!a.empty()) {
        Rat lead = a.back();
        for (Rat& c : a) c /= lead;
    }
    return a;
}

Rat qpoly_eval0(const QPoly& p) { return p.empty() ? Rat(0) : p[0]; }

std::string qpoly_str(const QPoly& p) {
    if (p.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t d = 0; d < p.size(); ++d) {
        if (p[d] == 0) continue;
        if (!first) os << " + ";
        first = false;
        os << rat_str(p[d]);
        if (d == 1) os << "*eps";
        if (d > 1) os << "*eps^" << d;
    }
    return os.str();
}

QRat::QRat(const Rat& r) : den_{Rat(1)} {
    Rat c(r);
    c.canonicalize();
    if (c != 0) num_ = {c};
}

QRat::QRat(QPoly num, QPoly den) : num_(qpoly_trim(std::move(num))), den_(qpoly_trim(std::move(den))) {
    if (den_.empty()) throw math_error("QRat: zero denominator");
    reduce();
}

QRat QRat::epsilon() { return QRat(QPoly{Rat(0), Rat(1)}, QPoly{Rat(1)}); }

Rat QRat::constant() const {
    if (!is_constant()) throw math_error("QRat: not a constant");
    return num_.empty() ? Rat(0) : Rat(num_[0] / den_[0]);
}

void QRat::reduce() {
    if (num_.empty()) {
        den_ = {Rat(1)};
        return;
    }
    QPoly g = qpoly_gcd(num_, den_);
    if (g.size() > 1) {
        num_ = qpoly_div_exact(num_, g);
        den_ = qpoly_div_exact(den_, g);
    }
    Rat lead = den_.back();
    if (lead != 1) {
        for (Rat& c : num_) c /= lead;
        for (Rat& c : den_) c /= lead;
    }
}

QRat QRat::operator-() const {
    QRat r = *this;
    r.num_ = qpoly_neg(r.num_);
    return r;
}

QRat QRat::operator+(const QRat& o) const {
    return QRat(qpoly_add(qpoly_mul(num_, o.den_), qpoly_mul(o.num_, den_)),
                qpoly_mul(den_, o.den_));
}

QRat QRat::operator-(const QRat& o) const { return *this + (-o); }

QRat QRat::operator*(const QRat& o) const {
    return QRat(qpoly_mul(num_, o.num_), qpoly_mul(den_, o.den_));
}

QRat QRat::operator/(const QRat& o) const {
    if (o.is_zero()) throw math_error("QRat: division by zero");
    return QRat(qpoly_mul(num_, o.den_), qpoly_mul(den_, o.num_));
}

int QRat::sign_near_zero() const {
    if (num_.empty()) return 0;
    auto low = [](const QPoly& p) {
        for (const Rat& c : p)
            if (c != 0) return sign(c);
        return 0;
    };
    return low(num_) * low(den_);
}

QRat QRat::abs_near_zero() const {
    int s = sign_near_zero();
    if (s >= 0) return *this;
    return -*this;
}

bool QRat::has_pole_at_zero() const { return !num_.empty() && qpoly_eval0(den_) == 0; }

Rat QRat::limit0() const {
    if (num_.empty()) return Rat(0);
    if (qpoly_eval0(den_) == 0) throw math_error("singular presentation: pole at eps = 0");
    return Rat(qpoly_eval0(num_) / qpoly_eval0(den_));
}

std::string QRat::str() const {
    if (den_ == QPoly{Rat(1)}) return qpoly_str(num_);
    return "(" + qpoly_str(num_) + ")/(" + qpoly_str(den_) + ")";
}

EpsScalar::EpsScalar(const SymbolicScalar& s) : den_{Rat(1)} {
    if (!s.is_zero()) num_[0] = s;
}

EpsScalar::EpsScalar(std::map<int, SymbolicScalar> num, QPoly den)
    : num_(std::move(num)), den_(qpoly_trim(std::move(den))) {
    if (den_.empty()) throw math_error("EpsScalar: zero denominator");
    for (auto it = num_.begin(); it != num_.end();)
        it = it->second.is_zero() ? num_.erase(it) : std::next(it);
    reduce();
}

EpsScalar EpsScalar::from_qrat(const QRat& q) {
    std::map<int, SymbolicScalar> num;
    for (size_t d = 0; d < q.num().size(); ++d)
        if (q.num()[d] != 0) num[(int)d] = SymbolicScalar(q.num()[d]);
    return EpsScalar(std::move(num), q.den());
}

void EpsScalar::reduce() {
    if (num_.empty()) {
        den_ = {Rat(1)};
        return;
    }
    if (den_.size() > 1) {
        // gcd of the denominator with every rational slice of the numerator,
        // slices keyed by (pi power, 0 re / 1 im)
        QPoly g = den_;
        std::map<std::pair<int, int>, QPoly> slices;
        for (const auto& [d, s] : num_) {
            for (const auto& [pp, c] : s.terms()) {
                if (c.re != 0) {
                    QPoly& p = slices[{pp, 0}];
                    if ((size_t)d >= p.size()) p.resize(d + 1, Rat(0));
                    p[d] = c.re;
                }
                if (c.im != 0) {
                    QPoly& p = slices[{pp, 1}];
                    if ((size_t)d >= p.size()) p.resize(d + 1, Rat(0));
                    p[d] = c.im;
                }
            }
        }
        for (const auto& [key, p] : slices) {
            (void)key;
            g = qpoly_gcd(g, p);
            if (g.size() <= 1) break;
        }
        if (g.size() > 1) {
            den_ = qpoly_div_exact(den_, g);
            // divide each slice and rebuild the numerator
            std::map<int, SymbolicScalar> next;
            for (const auto& [key, p] : slices) {
                QPoly q = qpoly_div_exact(p, g);
                for (size_t d = 0; d < q.size(); ++d) {
                    if (q[d] == 0) continue;
                    GaussQ c = key.second == 0 ? GaussQ(q[d]) : GaussQ(Rat(0), q[d]);
                    next[(int)d] += SymbolicScalar::pi_power(key.first, c);
                }
            }
            // the += above needs SymbolicScalar default zero; rebuild via map
            std::map<int, SymbolicScalar> clean;
            for (auto& [d, s] : next)
                if (!s.is_zero()) clean[d] = s;
            num_ = std::move(clean);
        }
    }
    Rat lead = den_.back();
    if (lead != 1) {
        for (Rat& c : den_) c /= lead;
        Rat inv = 1 / lead;
        for (auto& [d, s] : num_) s = s.times_rat(inv);
    }
}

EpsScalar EpsScalar::operator-() const {
    EpsScalar r = *this;
    for (auto& [d, s] : r.num_) s = -s;
    return r;
}

EpsScalar EpsScalar::operator+(const EpsScalar& o) const {
    // common denominator
    std::map<int, SymbolicScalar> num;
    auto accumulate = [&num](const std::map<int, SymbolicScalar>& n, const QPoly& mult) {
        for (const auto& [d, s] : n)
            for (size_t k = 0; k < mult.size(); ++k) {
                if (mult[k] == 0) continue;
                auto key = d + (int)k;
                auto it = num.find(key);
                SymbolicScalar add = s.times_rat(mult[k]);
                if (it == num.end())
                    num[key] = add;
                else {
                    it->second += add;
                    if (it->second.is_zero()) num.erase(it);
                }
            }
    };
    accumulate(num_, o.den_);
    accumulate(o.num_, den_);
    return EpsScalar(std::move(num), qpoly_mul(den_, o.den_));
}

EpsScalar EpsScalar::operator-(const EpsScalar& o) const { return *this + (-o); }

EpsScalar EpsScalar::operator*(const EpsScalar& o) const {
    std::map<int, SymbolicScalar> num;
    for (const auto& [d1, s1] : num_)
        for (const auto& [d2, s2] : o.num_) {
            SymbolicScalar p = s1 * s2;
            if (p.is_zero()) continue;
            auto it = num.find(d1 + d2);
            if (it == num.end())
                num[d1 + d2] = p;
            else {
                it->second += p;
                if (it->second.is_zero()) num.erase(it);
            }
        }
    return EpsScalar(std::move(num), qpoly_mul(den_, o.den_));
}

EpsScalar EpsScalar::times(const SymbolicScalar& s) const {
    if (s.is_zero()) return EpsScalar();
    EpsScalar r = *this;
    for (auto& [d, c] : r.num_) c = c * s;
    return r;
}

EpsScalar EpsScalar::times_qrat(const QRat& q) const {
    std::map<int, SymbolicScalar> num;
    for (const auto& [d, s] : num_)
        for (size_t k = 0; k < q.num().size(); ++k) {
            if (q.num()[k] == 0) continue;
            auto key = d + (int)k;
            auto it = num.find(key);
            SymbolicScalar add = s.times_rat(q.num()[k]);
            if (it == num.end())
                num[key] = add;
            else {
                it->second += add;
                if (it->second.is_zero()) num.erase(it);
            }
        }
    return EpsScalar(std::move(num), qpoly_mul(den_, q.den()));
}

bool EpsScalar::has_pole_at_zero() const {
    return !num_.empty() && qpoly_eval0(den_) == 0;
}

SymbolicScalar EpsScalar::limit0() const {
    if (num_.empty()) return SymbolicScalar::zero();
    if (qpoly_eval0(den_) == 0)
        throw math_error("singular presentation: coefficient has a pole at eps = 0");
    auto it = num_.find(0);
    SymbolicScalar n = it == num_.end() ? SymbolicScalar::zero() : it->second;
    return n.times_rat(Rat(1 / qpoly_eval0(den_)));
}

std::string EpsScalar::str() const {
    std::ostringstream os;
    os << "(";
    bool first = true;
    for (const auto& [d, s] : num_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << s.str() << ")";
        if (d == 1) os << "*eps";
        if (d > 1) os << "*eps^" << d;
    }
    if (first) os << "0";
    os << ")";
    if (!(den_ == QPoly{Rat(1)})) os << "/(" << qpoly_str(den_) << ")";
    return os.str();
}

} // namespace qtop
