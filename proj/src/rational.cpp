#include "qtop/rational.hpp"

#include "qtop/errors.hpp"

#include <algorithm>

namespace qtop {

Rat rat_pow(const Rat& base, long e) {
    if (e == 0) return Rat(1);
    if (base == 0) {
        if (e < 0) throw math_error("rat_pow: zero to negative power");
        return Rat(0);
    }
    Rat b = e < 0 ? Rat(1 / base) : base;
    unsigned long n = e < 0 ? -(unsigned long)e : (unsigned long)e;
    Rat acc(1);
    while (n) {
        if (n & 1) acc *= b;
        b *= b;
        n >>= 1;
    }
    return acc;
}

std::string rat_str(const Rat& x) {
    Rat c(x);
    c.canonicalize();
    return c.get_str();
}

Rat rat_parse(const std::string& s) {
    Rat r;
    if (r.set_str(s, 10) != 0) throw input_error("bad rational literal: " + s);
    r.canonicalize();
    return r;
}

Int factorial(unsigned n) {
    Int f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return f;
}

Int double_factorial(long n) {
    if (n <= 0) return 1;
    Int f;
    mpz_2fac_ui(f.get_mpz_t(), (unsigned long)n);
    return f;
}

Int binomial(unsigned n, unsigned k) {
    Int b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return b;
}

bool is_prime(long n) {
    if (n < 2) return false;
    for (long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

long mod_pow(long base, long e, long m) {
    long b = base % m;
    if (b < 0) b += m;
    long acc = 1 % m;
    while (e) {
        if (e & 1) acc = (acc * b) % m;
        b = (b * b) % m;
        e >>= 1;
    }
    return acc;
}

long mod_inverse(long a, long m) {
    long r = a % m;
    if (r < 0) r += m;
    if (r == 0) throw math_error("non-invertible denominator");
    return mod_pow(r, m - 2, m);
}

long mod_reduce(const Rat& x, long m) {
    Int num = x.get_num(), den = x.get_den();
    long n = mpz_fdiv_ui(num.get_mpz_t(), m);
    long d = mpz_fdiv_ui(den.get_mpz_t(), m);
    return (n * mod_inverse(d, m)) % m;
}

void extract_square(const Int& n, Int& s, Int& f) {
    if (n <= 0) throw math_error("extract_square: argument must be positive");
    s = 1;
    f = 1;
    Int rest = n;
    for (Int d = 2; d * d <= rest; ++d) {
        if (rest % d != 0) continue;
        unsigned e = 0;
        while (rest % d == 0) {
            rest /= d;
            ++e;
        }
        for (unsigned i = 0; i < e / 2; ++i) s *= d;
        if (e & 1) f *= d;
    }
    f *= rest;
}

Rat det(RatMat m) {
    const size_t n = m.size();
    Rat d(1);
    for (size_t c = 0; c < n; ++c) {
        size_t piv = c;
        while (piv < n && m[piv][c] == 0) ++piv;
        if (piv == n) return Rat(0);
        if (piv != c) {
            std::swap(m[piv], m[c]);
            d = -d;
        }
        d *= m[c][c];
        for (size_t r = c + 1; r < n; ++r) {
            if (m[r][c] == 0) continue;
            Rat factor = m[r][c] / m[c][c];
            for (size_t k = c; k < n; ++k) m[r][k] -= factor * m[c][k];
        }
    }
    return d;
}

int signature(RatMat m) {
    // Symmetric congruence elimination. When every live diagonal entry
    // vanishes, a nonzero off-diagonal pair spans a hyperbolic block of
    // signature 0 which is Schur-complemented away.
    const size_t n = m.size();
    std::vector<size_t> idx(n);
    for (size_t i = 0; i < n; ++i) idx[i] = i;
    int sig = 0;
    while (!idx.empty()) {
        bool found = false;
        for (size_t pos = 0; pos < idx.size() && !found; ++pos) {
            size_t i = idx[pos];
            if (m[i][i] == 0) continue;
            found = true;
            sig += sign(m[i][i]);
            std::vector<size_t> rest;
            for (size_t j : idx)
                if (j != i) rest.push_back(j);
            for (size_t r : rest) {
                if (m[r][i] == 0) continue;
                Rat f = m[r][i] / m[i][i];
                for (size_t c : rest) m[r][c] -= f * m[i][c];
            }
            idx = rest;
        }
        if (found) continue;
        // all diagonals zero on the live index set
        bool off = false;
        for (size_t a = 0; a < idx.size() && !off; ++a)
            for (size_t b = a + 1; b < idx.size() && !off; ++b) {
                size_t i = idx[a], j = idx[b];
                if (m[i][j] == 0) continue;
                off = true;
                Rat q = m[i][j];
                std::vector<size_t> rest;
                for (size_t k : idx)
                    if (k != i && k != j) rest.push_back(k);
                // Schur complement w.r.t. block [[0,q],[q,0]]
                for (size_t r : rest)
                    for (size_t c : rest)
                        m[r][c] -= (m[r][i] * m[j][c] + m[r][j] * m[i][c]) / q;
                idx = rest;
            }
        if (!off) break; // remaining block is zero
    }
    return sig;
}

RatVec solve_linear(RatMat a, RatVec b) {
    const size_t n = a.size();
    for (size_t c = 0; c < n; ++c) {
        size_t piv = c;
        while (piv < n && a[piv][c] == 0) ++piv;
        if (piv == n) throw math_error("solve_linear: singular matrix");
        std::swap(a[piv], a[c]);
        std::swap(b[piv], b[c]);
        for (size_t r = 0; r < n; ++r) {
            if (r == c || a[r][c] == 0) continue;
            Rat f = a[r][c] / a[c][c];
            for (size_t k = c; k < n; ++k) a[r][k] -= f * a[c][k];
            b[r] -= f * b[c];
        }
    }
    RatVec x(n);
    for (size_t i = 0; i < n; ++i) x[i] = b[i] / a[i][i];
    return x;
}

std::optional<RatVec> solve_consistent(RatMat a, RatVec b) {
    const size_t rows = a.size();
    const size_t cols = rows ? a[0].size() : 0;
    std::vector<size_t> pivot_col;
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t piv = r;
        while (piv < rows && a[piv][c] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(a[piv], a[r]);
        std::swap(b[piv], b[r]);
        for (size_t rr = 0; rr < rows; ++rr) {
            if (rr == r || a[rr][c] == 0) continue;
            Rat f = a[rr][c] / a[r][c];
            for (size_t k = c; k < cols; ++k) a[rr][k] -= f * a[r][k];
            b[rr] -= f * b[r];
        }
        pivot_col.push_back(c);
        ++r;
    }
    for (size_t rr = r; rr < rows; ++rr)
        if (b[rr] != 0) return std::nullopt;
    RatVec x(cols, Rat(0));
    for (size_t i = 0; i < pivot_col.size(); ++i) x[pivot_col[i]] = b[i] / a[i][pivot_col[i]];
    return x;
}

RatVec faulhaber(unsigned j) {
    // n^{j+1} = sum_{i<=j} C(j+1,i) T_i(n), solved triangularly.
    static std::vector<RatVec> cache;
    if (j < cache.size()) return cache[j];
    for (unsigned jj = (unsigned)cache.size(); jj <= j; ++jj) {
        RatVec t(jj + 2, Rat(0));
        t[jj + 1] = 1; // n^{j+1}
        for (unsigned i = 0; i < jj; ++i) {
            Rat c(binomial(jj + 1, i));
            const RatVec& ti = cache[i];
            for (size_t d = 0; d < ti.size(); ++d) t[d] -= c * ti[d];
        }
        Rat lead(binomial(jj + 1, jj));
        for (auto& v : t) v /= lead;
        cache.push_back(t);
    }
    return cache[j];
}

RatVec symmetric_power_sum(unsigned r) {
    // sum_k (a-1-2k)^r = sum_j C(r,j) (a-1)^{r-j} (-2)^j T_j(a)
    RatVec out(r + 2, Rat(0));
    for (unsigned jj = 0; jj <= r; ++jj) {
        RatVec tj = faulhaber(jj);
        // (a-1)^{r-jj} expanded
        RatVec am1(r - jj + 1, Rat(0));
        for (unsigned t = 0; t <= r - jj; ++t) {
            Rat c(binomial(r - jj, t));
            if ((r - jj - t) & 1) c = -c;
            am1[t] = c;
        }
        Rat pref(binomial(r, jj));
        pref *= rat_pow(Rat(-2), jj);
        for (size_t d1 = 0; d1 < am1.size(); ++d1)
            for (size_t d2 = 0; d2 < tj.size(); ++d2) {
                size_t d = d1 + d2;
                if (d >= out.size()) out.resize(d + 1, Rat(0));
                out[d] += pref * am1[d1] * tj[d2];
            }
    }
    while (!out.empty() && out.back() == 0) out.pop_back();
    return out;
}

} // namespace qtop
