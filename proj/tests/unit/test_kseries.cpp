#include "qtop/kseries.hpp"

#include "qtop/errors.hpp"
#include "qtop/numeric.hpp"

#include <doctest.h>

#include <random>
#include <vector>

using namespace qtop;

namespace {

std::mt19937 rng(911);

// Independent oracle: coefficients of log(sin(u)/u) in u, via long division of
// the sine series followed by the formal logarithm, all in plain rationals.
std::vector<Rat> log_sinc_oracle(int order) {
    // sinc[2r] = (-1)^r / (2r+1)!
    std::vector<Rat> sinc(order + 1, Rat(0));
    for (int r = 0; 2 * r <= order; ++r) {
        Rat f(1);
        for (int k = 2; k <= 2 * r + 1; ++k) f *= k;
        sinc[2 * r] = Rat((r % 2) ? -1 : 1) / f;
    }
    // log(1 + y) = sum (-1)^{k+1} y^k / k
    std::vector<Rat> y = sinc;
    y[0] = 0;
    std::vector<Rat> out(order + 1, Rat(0));
    std::vector<Rat> pw(order + 1, Rat(0));
    pw[0] = 1;
    for (int k = 1; k <= order; ++k) {
        std::vector<Rat> nxt(order + 1, Rat(0));
        for (int a = 0; a <= order; ++a)
            for (int b = 0; a + b <= order; ++b) nxt[a + b] += pw[a] * y[b];
        pw = nxt;
        Rat sgn((k % 2) ? 1 : -1);
        for (int d = 0; d <= order; ++d) out[d] += sgn * pw[d] / k;
    }
    return out;
}

KSeries random_series(int order, bool unit_constant) {
    KSeries s(order);
    std::uniform_int_distribution<int> num(-6, 6);
    std::uniform_int_distribution<int> den(1, 5);
    for (int n = unit_constant ? 1 : 0; n <= order; ++n)
        s.set(n, SymbolicScalar::i_pi_power(n, Rat(num(rng), den(rng))));
    if (unit_constant) s.set(0, SymbolicScalar::one());
    return s;
}

} // namespace

TEST_CASE("textbook log and exp") {
    KSeries one_plus_x(3);
    one_plus_x.set(0, SymbolicScalar::one());
    one_plus_x.set(1, SymbolicScalar::one());
    KSeries lg = series_log(one_plus_x);
    CHECK(lg.coeff(1) == SymbolicScalar::one());
    CHECK(lg.coeff(2) == SymbolicScalar(Rat(-1, 2)));
    CHECK(lg.coeff(3) == SymbolicScalar(Rat(1, 3)));

    CHECK(series_exp(KSeries::zero(4)).equals(KSeries::one(4)));
}

TEST_CASE("log of K sin(pi/K)/pi matches the long-division oracle") {
    const int order = 8;
    KSeries lg = series_log(KSeries::sinc(Rat(1), order));
    std::vector<Rat> oracle = log_sinc_oracle(order);
    for (int n = 0; n <= order; ++n) {
        CHECK(lg.coeff(n) == SymbolicScalar::pi_power(n, GaussQ(oracle[n])));
    }
    // spot values stated up front
    CHECK(lg.coeff(2) == SymbolicScalar::pi_power(2, GaussQ(Rat(-1, 6))));
    CHECK(lg.coeff(4) == SymbolicScalar::pi_power(4, GaussQ(Rat(-1, 180))));
}

TEST_CASE("exp and log are mutually inverse to truncation order") {
    for (int t = 0; t < 30; ++t) {
        KSeries a = random_series(6, true);
        CHECK(series_exp(series_log(a)).equals(a));
        KSeries b = random_series(6, false);
        b.set(0, SymbolicScalar::zero());
        CHECK(series_log(series_exp(b)).equals(b));
    }
}

TEST_CASE("series multiplication truncates to the minimum order and notes it") {
    KSeries a = random_series(6, false), b = random_series(4, false);
    KSeries p = a * b;
    CHECK(p.order() == 4);
    CHECK(p.provenance().has_value());
    // associativity at every truncation order
    KSeries c = random_series(5, false);
    CHECK(((a * b) * c).equals(a * (b * c)));
}

TEST_CASE("sn_from_delta on the S^3 baseline series") {
    auto s = sn_from_delta(KSeries::sinc(Rat(1), 6));
    REQUIRE(s.size() == 6);
    CHECK(s[0] == 0);
    CHECK(s[1] == Rat(1, 6));
    CHECK(s[2] == 0);
    CHECK(s[3] == Rat(-1, 180));
    CHECK(s[4] == 0);

    auto none = sn_from_delta(KSeries::one(4));
    for (const Rat& v : none) CHECK(v == 0);
}

TEST_CASE("delta_from_sn round-trips") {
    for (int t = 0; t < 20; ++t) {
        KSeries d = KSeries::one(5);
        // build a delta series with rational S_n
        std::uniform_int_distribution<int> num(-5, 5);
        std::vector<Rat> s;
        for (int n = 1; n <= 5; ++n) s.push_back(Rat(num(rng)) / 3);
        d = delta_from_sn(s, 5);
        auto s2 = sn_from_delta(d);
        CHECK(s == s2);
    }
}

TEST_CASE("sn_from_delta rejects pi leakage") {
    KSeries bad = KSeries::one(2);
    bad.set(1, SymbolicScalar::pi_power(2, GaussQ(Rat(1))));
    CHECK_THROWS_AS(sn_from_delta(bad), math_error);
}

TEST_CASE("change_variable_to_zeta: S = 0 gives lambda_0 = 1") {
    auto lam = change_variable_to_zeta(ohtsuki_generating_series({}, 4), 4);
    REQUIRE(lam.size() == 5);
    CHECK(lam[0] == 1);
}

TEST_CASE("zeta substitution is inverse to the reversion") {
    // substituting u(v) back into the lambda expansion reproduces the series
    std::vector<Rat> s = {Rat(1, 2), Rat(-1, 3)};
    const int order = 5;
    KSeries f = ohtsuki_generating_series(s, order);
    auto lam = change_variable_to_zeta(f, order);
    // sum_n lambda_n u(v)^n as a series in v
    KSeries u(order);
    SymbolicScalar two_pi_i = SymbolicScalar::pi_power(1, GaussQ(Rat(0), Rat(2)));
    SymbolicScalar pw = SymbolicScalar::one();
    Rat fact(1);
    for (int m = 1; m <= order; ++m) {
        pw *= two_pi_i;
        fact *= m;
        u.set(m, pw.times_rat(Rat(1 / fact)));
    }
    KSeries acc = KSeries::zero(order);
    KSeries upow = KSeries::one(order);
    acc.add_to(0, SymbolicScalar(lam[0]));
    for (int n = 1; n <= order; ++n) {
        upow = upow * u;
        KSeries term = upow.times(SymbolicScalar(lam[n]));
        for (const auto& [k, c] : term.coeffs()) acc.add_to(k, c);
    }
    CHECK(acc.equals(f));
}

TEST_CASE("kseries canonicalization folds even prefactor parts") {
    KSeries s = KSeries::one(3);
    s = s.times_prefactor(Prefactor(4, 2, 0, Rat(1), Rat(3)));
    KSeries c = s.canonical();
    CHECK(c.prefactor().is_trivial());
    CHECK(c.coeff(0) == SymbolicScalar(Rat(-6))); // -1 * 2 * 3
}

TEST_CASE("shift_k guards positive powers of K") {
    KSeries s = KSeries::one(3);
    CHECK_THROWS_AS(s.shift_k(1), math_error);
    KSeries t(3);
    t.set(1, SymbolicScalar::one());
    KSeries up = t.shift_k(1);
    CHECK(up.coeff(0) == SymbolicScalar::one());
    CHECK(up.order() == 2);
}
