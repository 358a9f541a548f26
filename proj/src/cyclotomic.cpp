#include "qtop/cyclotomic.hpp"

#include "qtop/errors.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

namespace qtop {

namespace {

using IPoly = std::vector<Int>; // dense, ascending degree

IPoly ipoly_div_exact(const IPoly& num, const IPoly& den) {
    IPoly rem = num;
    if (den.empty() || den.back() == 0) throw math_error("ipoly_div_exact: bad divisor");
    long dn = (long)rem.size() - 1, dd = (long)den.size() - 1;
    IPoly quot(dn - dd + 1, Int(0));
    for (long d = dn; d >= dd; --d) {
        if (rem[d] == 0) continue;
        Int q = rem[d] / den[dd];
        if (q * den[dd] != rem[d]) throw math_error("ipoly_div_exact: non-exact division");
        quot[d - dd] = q;
        for (long k = 0; k <= dd; ++k) rem[d - dd + k] -= q * den[k];
    }
    for (const Int& c : rem)
        if (c != 0) throw math_error("ipoly_div_exact: nonzero remainder");
    return quot;
}

IPoly cyclotomic_poly(long n) {
    static std::map<long, IPoly> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto compute = [&](long m, auto&& self) -> IPoly {
        auto it = cache.find(m);
        if (it != cache.end()) return it->second;
        IPoly p((size_t)m + 1, Int(0)); // x^m - 1
        p[0] = -1;
        p[m] = 1;
        for (long d = 1; d < m; ++d) {
            if (m % d != 0) continue;
            p = ipoly_div_exact(p, self(d, self));
        }
        cache[m] = p;
        return p;
    };
    return compute(n, compute);
}

long totient(long n) {
    long result = n, m = n;
    for (long p = 2; p * p <= m; ++p) {
        if (m % p != 0) continue;
        while (m % p == 0) m /= p;
        result -= result / p;
    }
    if (m > 1) result -= result / m;
    return result;
}

} // namespace

CycField::CycField(long order) : order_(order) {
    phi_poly_ = cyclotomic_poly(order);
    dim_ = (long)phi_poly_.size() - 1;
    if (totient(order) != dim_) throw math_error("cyclotomic polynomial degree mismatch");
    // power rows for x^j, j up to max(order, 2 dim - 1)
    long maxpow = std::max(order_, 2 * dim_ - 1) + 1;
    power_rows_.reserve(maxpow);
    std::vector<Int> row(dim_, Int(0));
    row[0] = 1;
    power_rows_.push_back(row);
    for (long j = 1; j < maxpow; ++j) {
        std::vector<Int> next(dim_, Int(0));
        // multiply by x then reduce the overflow via x^dim = -(phi - x^dim)
        Int top = row[dim_ - 1];
        for (long k = dim_ - 1; k >= 1; --k) next[k] = row[k - 1];
        next[0] = 0;
        if (top != 0)
            for (long k = 0; k < dim_; ++k) next[k] -= top * phi_poly_[k];
        power_rows_.push_back(next);
        row = next;
    }
}

std::shared_ptr<const CycField> CycField::get(long order) {
    static std::map<long, std::shared_ptr<const CycField>> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(order);
    if (it != cache.end()) return it->second;
    auto f = std::shared_ptr<const CycField>(new CycField(order));
    cache[order] = f;
    return f;
}

const std::vector<Int>& CycField::power_row(long e) const {
    long r = ((e % order_) + order_) % order_;
    return power_rows_[r];
}

CycNumber CycNumber::one(std::shared_ptr<const CycField> f) {
    CycNumber z(std::move(f));
    z.coords_[0] = 1;
    return z;
}

CycNumber CycNumber::zeta_pow(std::shared_ptr<const CycField> f, long e) {
    CycNumber z(f);
    const auto& row = f->power_row(e);
    for (long k = 0; k < f->dim(); ++k) z.coords_[k] = Rat(row[k]);
    return z;
}

CycNumber CycNumber::from_rat(std::shared_ptr<const CycField> f, const Rat& r) {
    CycNumber z(std::move(f));
    z.coords_[0] = r;
    return z;
}

bool CycNumber::is_zero() const {
    for (const Rat& c : coords_)
        if (c != 0) return false;
    return true;
}

namespace {
void check_same_field(const CycNumber& a, const CycNumber& b) {
    if (!a.field() || !b.field() || a.field()->order() != b.field()->order())
        throw math_error("CycNumber: mixed field orders");
}
} // namespace

CycNumber CycNumber::operator-() const {
    CycNumber r = *this;
    for (Rat& c : r.coords_) c = -c;
    return r;
}

CycNumber CycNumber::operator+(const CycNumber& o) const {
    check_same_field(*this, o);
    CycNumber r = *this;
    for (size_t k = 0; k < coords_.size(); ++k) r.coords_[k] += o.coords_[k];
    return r;
}

CycNumber CycNumber::operator-(const CycNumber& o) const { return *this + (-o); }

CycNumber CycNumber::operator*(const CycNumber& o) const {
    check_same_field(*this, o);
    const long dim = field_->dim();
    // schoolbook product then reduction by precomputed power rows
    RatVec prod(2 * dim - 1, Rat(0));
    for (long a = 0; a < dim; ++a) {
        if (coords_[a] == 0) continue;
        for (long b = 0; b < dim; ++b) {
            if (o.coords_[b] == 0) continue;
            prod[a + b] += coords_[a] * o.coords_[b];
        }
    }
    CycNumber r(field_);
    for (long d = 0; d < 2 * dim - 1; ++d) {
        if (prod[d] == 0) continue;
        if (d < dim) {
            r.coords_[d] += prod[d];
        } else {
            const auto& row = field_->power_row(d);
            for (long k = 0; k < dim; ++k)
                if (row[k] != 0) r.coords_[k] += prod[d] * Rat(row[k]);
        }
    }
    return r;
}

CycNumber CycNumber::times(const Rat& r) const {
    CycNumber out = *this;
    for (Rat& c : out.coords_) c *= r;
    return out;
}

bool CycNumber::operator==(const CycNumber& o) const {
    check_same_field(*this, o);
    return coords_ == o.coords_;
}

CycNumber CycNumber::galois(long a) const {
    long D = field_->order();
    long r = ((a % D) + D) % D;
    Int g;
    mpz_gcd_ui(g.get_mpz_t(), Int(r).get_mpz_t(), (unsigned long)D);
    if (g != 1) throw math_error("galois: exponent not coprime to field order");
    CycNumber out(field_);
    for (long j = 0; j < field_->dim(); ++j) {
        if (coords_[j] == 0) continue;
        const auto& row = field_->power_row(j * r);
        for (long k = 0; k < field_->dim(); ++k)
            if (row[k] != 0) out.coords_[k] += coords_[j] * Rat(row[k]);
    }
    return out;
}

CycNumber CycNumber::inverse() const {
    if (is_zero()) throw math_error("CycNumber: inverse of zero");
    const long dim = field_->dim();
    // columns: coordinates of z * zeta^j
    RatMat m((size_t)dim, RatVec((size_t)dim, Rat(0)));
    for (long j = 0; j < dim; ++j) {
        CycNumber col = *this * CycNumber::zeta_pow(field_, j);
        for (long k = 0; k < dim; ++k) m[k][j] = col.coords_[k];
    }
    RatVec e0((size_t)dim, Rat(0));
    e0[0] = 1;
    RatVec x = solve_linear(std::move(m), std::move(e0));
    CycNumber r(field_);
    r.coords_ = std::move(x);
    return r;
}

CycNumber CycNumber::embed(const std::shared_ptr<const CycField>& target) const {
    long D = field_->order(), T = target->order();
    if (T % D != 0) throw math_error("embed: target order not a multiple");
    long stride = T / D;
    CycNumber out(target);
    for (long j = 0; j < field_->dim(); ++j) {
        if (coords_[j] == 0) continue;
        const auto& row = target->power_row(j * stride);
        for (long k = 0; k < target->dim(); ++k)
            if (row[k] != 0) out.coords_[k] += coords_[j] * Rat(row[k]);
    }
    return out;
}

BigComplex CycNumber::eval_numeric() const {
    BigFloat two_pi = BigFloat::pi() * BigFloat(2L);
    BigComplex acc{BigFloat(0L), BigFloat(0L)};
    for (long j = 0; j < field_->dim(); ++j) {
        if (coords_[j] == 0) continue;
        BigFloat angle = two_pi * BigFloat(j) / BigFloat(field_->order());
        BigComplex term = BigComplex::unit_phase(angle) * BigFloat(coords_[j]);
        acc = acc + term;
    }
    return acc;
}

std::string CycNumber::str() const {
    std::ostringstream os;
    bool first = true;
    for (long j = 0; j < field_->dim(); ++j) {
        if (coords_[j] == 0) continue;
        if (!first) os << " + ";
        first = false;
        os << rat_str(coords_[j]);
        if (j > 0) os << "*z^" << j;
    }
    if (first) os << "0";
    return os.str();
}

CycK::CycK(long K, long kmax) : K_(K) {
    if (!is_prime(K) || K < 3)
        throw input_error("K must be an odd prime >= 3, got " + std::to_string(K));
    if (K > kmax)
        throw input_error("K = " + std::to_string(K) + " exceeds the cyclotomic bound " +
                          std::to_string(kmax) + " (raise it explicitly if intended)");
    field_ = CycField::get(8 * K);
}

CycNumber CycK::sin_pi_n_over_K(long n) const {
    // (z^{4n} - z^{-4n}) / (2i), 1/(2i) = -i/2 = -z^{2K}/2
    CycNumber num = CycNumber::zeta_pow(field_, 4 * n) - CycNumber::zeta_pow(field_, -4 * n);
    CycNumber minus_half_i = CycNumber::zeta_pow(field_, 2 * K_).times(Rat(-1, 2));
    return num * minus_half_i;
}

CycNumber CycK::sqrt2() const {
    return CycNumber::zeta_pow(field_, K_) + CycNumber::zeta_pow(field_, -K_);
}

CycNumber CycK::sqrtK() const {
    CycNumber g = zero();
    for (long x = 0; x < K_; ++x) g += zetaK_pow((x * x) % K_);
    if (K_ % 4 == 3) g = g * (-i());
    return g;
}

CycNumber CycK::bracket(long n) const {
    if (n < 0) return -bracket(-n);
    CycNumber acc = zero();
    for (long k = 0; k < n; ++k) acc += CycNumber::zeta_pow(field_, 4 * (n - 1 - 2 * k));
    return acc;
}

CycNumber CycK::bracket_ratio(long a, long b) const {
    if (a < 0) throw math_error("bracket_ratio: negative color");
    CycNumber acc = zero();
    for (long k = 0; k < a; ++k) acc += CycNumber::zeta_pow(field_, 4 * b * (a - 1 - 2 * k));
    return acc;
}

int legendre(long p, long K) {
    if (!is_prime(K) || K < 3) throw input_error("legendre: K must be an odd prime");
    long r = mod_pow(p, (K - 1) / 2, K);
    if (r == 0) return 0;
    return r == 1 ? 1 : -1;
}

long vee(long p, long q, long K) {
    long qi = mod_inverse(q, K);
    long pr = p % K;
    if (pr < 0) pr += K;
    return (pr * qi) % K;
}

long vee(const Rat& x, long K) { return mod_reduce(x, K); }

CycNumber gauss_sum_direct(long p, long q, long n, const CycK& ctx) {
    long K = ctx.K();
    if (std::gcd(q < 0 ? -q : q, K) != 1)
        throw input_error("gauss_sum_direct: q must be coprime to K");
    long qs = mod_inverse(q, K);
    long a = ((p % K) * qs) % K;
    CycNumber acc = ctx.zero();
    for (long al = 0; al < K; ++al) acc += ctx.zetaK_pow((a * al * al + 2 * n * al) % K);
    return acc;
}

CycNumber gauss_sum_closed(long p, long q, long n, const CycK& ctx) {
    long K = ctx.K();
    if (std::gcd(p < 0 ? -p : p, K) != 1 || std::gcd(q < 0 ? -q : q, K) != 1)
        throw input_error("gauss_sum_closed: p and q must be coprime to K");
    // sum = legendre(p q^*) * g_K * e^{-2 pi i p^* q n^2 / K} with the
    // classical g_K = sqrt(K) (K = 1 mod 4), i sqrt(K) (K = 3 mod 4).
    long qs = mod_inverse(q, K);
    long ps = mod_inverse(p, K);
    int leg = legendre((p % K) * qs % K, K);
    CycNumber g = ctx.sqrtK();
    if (K % 4 == 3) g = g * ctx.i();
    long expo = ((-(ps * (q % K) % K) * ((n * n) % K)) % K + K) % K;
    return (g * ctx.zetaK_pow(expo)).times(Rat(leg));
}

std::vector<Int> zeta_minus_one_expand(const CycNumber& z, long K) {
    const auto& f = z.field();
    if (f->order() % K != 0) throw math_error("zeta_minus_one_expand: field does not contain zeta_K");
    long stride = f->order() / K;
    const long dim = f->dim();
    // basis columns (zeta_K - 1)^n, n = 0..K-2
    CycNumber zetaK = CycNumber::zeta_pow(f, stride);
    CycNumber u = zetaK - CycNumber::one(f);
    RatMat m((size_t)dim, RatVec((size_t)(K - 1), Rat(0)));
    CycNumber pow = CycNumber::one(f);
    for (long n = 0; n <= K - 2; ++n) {
        if (n > 0) pow = pow * u;
        for (long k = 0; k < dim; ++k) m[k][n] = pow.coords()[k];
    }
    RatVec b = z.coords();
    auto x = solve_consistent(std::move(m), std::move(b));
    if (!x) throw math_error("not in Z[zeta_K]: element lies outside the order-K subfield");
    std::vector<Int> out;
    out.reserve(K - 1);
    for (const Rat& c : *x) {
        if (c.get_den() != 1)
            throw math_error("not in Z[zeta_K]: non-integer coordinate " + rat_str(c));
        out.push_back(c.get_num());
    }
    return out;
}

} // namespace qtop
