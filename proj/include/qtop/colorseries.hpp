#pragma once

#include "qtop/epsilon.hpp"
#include "qtop/errors.hpp"
#include "qtop/kseries.hpp"

#include <map>
#include <optional>
#include <vector>

namespace qtop {

// Coefficient-field adapters. The series machinery is generic over the
// plain field (exact scalars, rational linking entries) and the
// epsilon-extended one (rational functions of the regularization parameter).
struct PlainField {
    using C = SymbolicScalar;
    using R = Rat;
    static C lift(const SymbolicScalar& s) { return s; }
    static C mul_entry(const C& c, const R& e) { return c.times_rat(e); }
    static R from_rat(const Rat& r) { return r; }
    static R pow(const R& b, long e) { return rat_pow(b, e); }
    static bool is_zero(const R& r) { return r == 0; }
    static bool c_is_zero(const C& c) { return c.is_zero(); }
    static int sign0(const R& r) { return sign(r); }
    static R abs0(const R& r) { return rat_abs(r); }
    static R inv(const R& r) { return Rat(1 / r); }
};

struct EpsField {
    using C = EpsScalar;
    using R = QRat;
    static C lift(const SymbolicScalar& s) { return EpsScalar(s); }
    static C mul_entry(const C& c, const R& e) { return c.times_qrat(e); }
    static R from_rat(const Rat& r) { return QRat(r); }
    static R pow(const R& b, long e) {
        QRat acc{Rat(1)};
        QRat base = e < 0 ? QRat(Rat(1)) / b : b;
        long n = e < 0 ? -e : e;
        for (long i = 0; i < n; ++i) acc = acc * base;
        return acc;
    }
    static bool is_zero(const R& r) { return r.is_zero(); }
    static bool c_is_zero(const C& c) { return c.is_zero(); }
    static int sign0(const R& r) { return r.sign_near_zero(); }
    static R abs0(const R& r) { return r.abs_near_zero(); }
    static R inv(const R& r) { return QRat(Rat(1)) / r; }
};

// Monomial key: exponents of x_j = alpha_j^2, one slot per component.
using Multidegree = std::vector<int>;

template <class F>
struct ColorPolyT {
    using C = typename F::C;
    std::map<Multidegree, C> mono;

    void add(const Multidegree& degs, const C& c) {
        if (F::c_is_zero(c)) return;
        auto it = mono.find(degs);
        if (it == mono.end()) {
            mono[degs] = c;
        } else {
            it->second = it->second + c;
            if (F::c_is_zero(it->second)) mono.erase(it);
        }
    }
    bool empty() const { return mono.empty(); }
};

struct BoundWitness {
    int order = 0;
    Multidegree degs;
    std::string note;
};

// Truncated 1/K series whose coefficients are polynomials in the squared
// colors, stored in diagonal-stripped normal form together with the current
// (Schur-updated) linking matrix.
template <class F>
class ColorSeriesT {
  public:
    using C = typename F::C;
    using R = typename F::R;
    using Poly = ColorPolyT<F>;

    ColorSeriesT(int ncomp, int order, std::vector<std::vector<R>> linking)
        : ncomp_(ncomp), order_(order), linking_(std::move(linking)) {
        if ((int)linking_.size() != ncomp)
            throw math_error("ColorSeries: linking matrix size mismatch");
    }

    static ColorSeriesT one(int ncomp, int order, std::vector<std::vector<R>> linking) {
        ColorSeriesT s(ncomp, order, std::move(linking));
        s.add_term(0, Multidegree(ncomp, 0), F::lift(SymbolicScalar::one()));
        return s;
    }
    // multiplicative factor carrier: zero linking matrix
    static ColorSeriesT factor(int ncomp, int order) {
        return ColorSeriesT(ncomp, order,
                            std::vector<std::vector<R>>(ncomp, std::vector<R>(ncomp, F::from_rat(Rat(0)))));
    }

    int ncomp() const { return ncomp_; }
    int order() const { return order_; }
    bool stripped() const { return true; }
    const std::map<int, Poly>& terms() const { return terms_; }
    const std::vector<std::vector<R>>& linking() const { return linking_; }
    std::vector<std::vector<R>>& linking() { return linking_; }

    void add_term(int n, const Multidegree& degs, const C& c) {
        if (n > order_) return;
        if (n < 0) throw math_error("ColorSeries: negative order index");
        if ((int)degs.size() != ncomp_) throw math_error("ColorSeries: multidegree arity mismatch");
        auto it = terms_.find(n);
        if (it == terms_.end()) it = terms_.emplace(n, Poly{}).first;
        it->second.add(degs, c);
        if (it->second.empty()) terms_.erase(it);
    }

    typename F::C coeff(int n, const Multidegree& degs) const {
        auto it = terms_.find(n);
        if (it == terms_.end()) return C{};
        auto jt = it->second.mono.find(degs);
        return jt == it->second.mono.end() ? C{} : jt->second;
    }

    ColorSeriesT truncated(int order) const {
        ColorSeriesT r(ncomp_, order, linking_);
        for (const auto& [n, poly] : terms_) {
            if (n > order) break;
            r.terms_[n] = poly;
        }
        return r;
    }

    // pointwise product; the left factor's linking matrix is kept
    ColorSeriesT mul_pointwise(const ColorSeriesT& o) const {
        if (ncomp_ != o.ncomp_) throw math_error("ColorSeries: component count mismatch");
        ColorSeriesT r(ncomp_, std::min(order_, o.order_), linking_);
        for (const auto& [n1, p1] : terms_) {
            if (n1 > r.order_) break;
            for (const auto& [n2, p2] : o.terms_) {
                if (n1 + n2 > r.order_) break;
                for (const auto& [d1, c1] : p1.mono)
                    for (const auto& [d2, c2] : p2.mono) {
                        Multidegree d(ncomp_);
                        for (int j = 0; j < ncomp_; ++j) d[j] = d1[j] + d2[j];
                        r.add_term(n1 + n2, d, c1 * c2);
                    }
            }
        }
        return r;
    }

    // disjoint-union product: component sets concatenate
    ColorSeriesT tensor(const ColorSeriesT& o) const {
        int n = ncomp_ + o.ncomp_;
        std::vector<std::vector<R>> link(n, std::vector<R>(n, F::from_rat(Rat(0))));
        for (int i = 0; i < ncomp_; ++i)
            for (int j = 0; j < ncomp_; ++j) link[i][j] = linking_[i][j];
        for (int i = 0; i < o.ncomp_; ++i)
            for (int j = 0; j < o.ncomp_; ++j) link[ncomp_ + i][ncomp_ + j] = o.linking_[i][j];
        ColorSeriesT r(n, std::min(order_, o.order_), std::move(link));
        for (const auto& [n1, p1] : terms_) {
            if (n1 > r.order_) break;
            for (const auto& [n2, p2] : o.terms_) {
                if (n1 + n2 > r.order_) break;
                for (const auto& [d1, c1] : p1.mono)
                    for (const auto& [d2, c2] : p2.mono) {
                        Multidegree d(n);
                        for (int j = 0; j < ncomp_; ++j) d[j] = d1[j];
                        for (int j = 0; j < o.ncomp_; ++j) d[ncomp_ + j] = d2[j];
                        r.add_term(n1 + n2, d, c1 * c2);
                    }
            }
        }
        return r;
    }

    ColorSeriesT times(const SymbolicScalar& s) const {
        ColorSeriesT r(ncomp_, order_, linking_);
        C c = F::lift(s);
        for (const auto& [n, poly] : terms_)
            for (const auto& [d, v] : poly.mono) r.add_term(n, d, v * c);
        return r;
    }

    // multiply by the expansion of e^{(i pi/2K) c x_j} and shift the stored
    // diagonal by -c, preserving the represented function
    ColorSeriesT scale_phase(int j, const R& c) const {
        if (j < 0 || j >= ncomp_) throw math_error("scale_phase: bad component");
        ColorSeriesT r(ncomp_, order_, linking_);
        r.linking_[j][j] = r.linking_[j][j] - c;
        Rat fact(1);
        for (const auto& [n, poly] : terms_) {
            for (const auto& [d, v] : poly.mono) {
                // sum_r (i pi/2)^r/r! c^r x_j^r K^{-r} * v
                fact = 1;
                for (int rr = 0; n + rr <= order_; ++rr) {
                    if (rr > 0) fact *= rr;
                    SymbolicScalar ph =
                        SymbolicScalar::i_pi_power(rr, Rat(1)).times_rat(Rat(rat_pow(Rat(2), -rr) / fact));
                    C cc = F::mul_entry(v * F::lift(ph), F::pow(c, rr));
                    Multidegree dd = d;
                    dd[j] += rr;
                    r.add_term(n + rr, dd, cc);
                }
            }
        }
        return r;
    }

    bool equal_terms(const ColorSeriesT& o) const {
        if (ncomp_ != o.ncomp_) return false;
        int ord = std::min(order_, o.order_);
        for (int n = 0; n <= ord; ++n) {
            auto a = terms_.find(n), b = o.terms_.find(n);
            bool ea = (a == terms_.end()), eb = (b == o.terms_.end());
            if (ea != eb) return false;
            if (ea) continue;
            if (!(a->second.mono == b->second.mono)) return false;
        }
        return true;
    }

    // per-component Melvin-Morton bound: deg_{x_j} <= floor(n/2)
    std::optional<BoundWitness> mm_violation() const {
        for (const auto& [n, poly] : terms_)
            for (const auto& [d, c] : poly.mono) {
                (void)c;
                for (int j = 0; j < ncomp_; ++j)
                    if (2 * d[j] > n) return BoundWitness{n, d, "deg x_" + std::to_string(j + 1)};
            }
        return std::nullopt;
    }

    // total degree <= 3n/4 (algebraically split inputs)
    std::optional<BoundWitness> asl_violation() const {
        for (const auto& [n, poly] : terms_)
            for (const auto& [d, c] : poly.mono) {
                (void)c;
                int total = 0;
                for (int j = 0; j < ncomp_; ++j) total += d[j];
                if (4 * total > 3 * n) return BoundWitness{n, d, "total degree"};
            }
        return std::nullopt;
    }

    bool is_algebraically_split() const {
        for (int i = 0; i < ncomp_; ++i)
            for (int j = 0; j < ncomp_; ++j)
                if (i != j && !F::is_zero(linking_[i][j])) return false;
        return true;
    }

  private:
    int ncomp_;
    int order_;
    std::map<int, Poly> terms_;
    std::vector<std::vector<R>> linking_;
};

using ColorSeries = ColorSeriesT<PlainField>;
using EpsColorSeries = ColorSeriesT<EpsField>;
using ColorPolynomial = ColorPolyT<PlainField>;

// spec-facing names
inline ColorSeries color_series_mul(const ColorSeries& a, const ColorSeries& b) {
    return a.tensor(b);
}
inline ColorSeries color_series_scale_phase(const ColorSeries& a, int j, const Rat& c) {
    return a.scale_phase(j, c);
}
inline bool check_mm_bound(const ColorSeries& s) { return !s.mm_violation().has_value(); }
// not-applicable (nullopt) when the link is not algebraically split
inline std::optional<bool> check_asl_bound(const ColorSeries& s) {
    if (!s.is_algebraically_split()) return std::nullopt;
    return !s.asl_violation().has_value();
}

// D table: (multidegree, n) -> coefficient
std::map<std::pair<Multidegree, int>, SymbolicScalar> extract_D(const ColorSeries& s);

// Epsilon dressing per the regularized linking matrix: the stripped normal
// form is unchanged, only the stored diagonal gains +eps.
EpsColorSeries epsilon_regularize(const ColorSeries& s);
// eps -> 0 limit; throws math_error("singular presentation") on a pole
ColorSeries epsilon_limit(const EpsColorSeries& s);

} // namespace qtop
