#include "qtop/jones.hpp"

#include "qtop/errors.hpp"

#include <doctest.h>

#include <cmath>

using namespace qtop;

namespace {

BigComplex eval_series(const ColorSeries& s, const std::vector<long>& colors, long K) {
    BigFloat invK = BigFloat(1L) / BigFloat(K);
    BigComplex acc{BigFloat(0L), BigFloat(0L)};
    for (const auto& [n, poly] : s.terms()) {
        for (const auto& [d, c] : poly.mono) {
            BigComplex v = eval_numeric(c);
            BigFloat mono(1L);
            for (size_t j = 0; j < d.size(); ++j)
                mono *= BigFloat(colors[j] * colors[j]).pow_si(d[j]);
            acc = acc + v * (mono * invK.pow_si(n));
        }
    }
    return acc;
}

// numeric value of the diagonal-stripped normal form
BigComplex stripped_numeric(const FramedLink& link, const std::vector<long>& colors, long K) {
    BigComplex j = jones_numeric(link, colors, K);
    auto l = link.linking_matrix();
    BigFloat pi = BigFloat::pi();
    BigFloat denom(1L);
    long phase_num = 0;
    for (size_t i = 0; i < colors.size(); ++i) {
        phase_num += l[i][i] * colors[i] * colors[i];
        denom *= BigFloat(colors[i]);
    }
    BigFloat ang = -pi / (BigFloat(2L) * BigFloat(K)) * BigFloat(phase_num);
    return j * BigComplex::unit_phase(ang) * (BigFloat(1L) / denom);
}

} // namespace

TEST_CASE("unknot exact value") {
    CycK ctx(5);
    CycNumber v = jones_exact(FramedLink::unknot(0), {3}, ctx);
    CHECK(v == ctx.bracket(3));
    double expect = std::sin(3 * M_PI / 5) / std::sin(M_PI / 5);
    CHECK(v.eval_numeric().re.to_double() == doctest::Approx(expect));
    CHECK_THROWS_AS(jones_exact(FramedLink::unknot(0), {5}, ctx), input_error);
    CHECK_THROWS_AS(jones_exact(FramedLink::unknot(0), {0}, ctx), input_error);
}

TEST_CASE("hopf pair gives sin(pi a b/K)/sin(pi/K)") {
    CycK ctx(7);
    for (long a = 1; a <= 3; ++a)
        for (long b = 1; b <= 3; ++b) {
            CycNumber v = jones_exact(FramedLink::hopf_chain({0, 0}), {a, b}, ctx);
            CHECK(v == ctx.bracket(a * b));
        }
}

TEST_CASE("two-component unlink multiplies brackets") {
    CycK ctx(7);
    auto link = FramedLink::disjoint_union({FramedLink::unknot(0), FramedLink::unknot(0)});
    CycNumber v = jones_exact(link, {2, 3}, ctx);
    CHECK(v == ctx.bracket(2) * ctx.bracket(3));
}

TEST_CASE("framing shift multiplies by the twist phase exactly") {
    CycK ctx(11);
    std::vector<std::pair<FramedLink, FramedLink>> pairs = {
        {FramedLink::unknot(0), FramedLink::unknot(1)},
        {FramedLink::torus_knot(2, 3, -1), FramedLink::torus_knot(2, 3, 0)},
    };
    for (long a = 1; a <= 4; ++a) {
        for (const auto& [low, high] : pairs) {
            CycNumber lhs = jones_exact(high, {a}, ctx);
            CycNumber rhs = jones_exact(low, {a}, ctx) *
                            CycNumber::zeta_pow(ctx.field(), 2 * (a * a - 1));
            CHECK(lhs == rhs);
        }
        // chain: shift framing of component 2
        CycNumber lhs = jones_exact(FramedLink::hopf_chain({2, 4}), {a, 3}, ctx);
        CycNumber rhs = jones_exact(FramedLink::hopf_chain({2, 3}), {a, 3}, ctx) *
                        CycNumber::zeta_pow(ctx.field(), 2 * (3 * 3 - 1));
        CHECK(lhs == rhs);
    }
}

TEST_CASE("torus knot T(1,p) is the unknot") {
    CycK ctx(11);
    for (long p : {1L, 2L, 5L})
        for (long a = 1; a <= 5; ++a)
            CHECK(jones_exact(FramedLink::torus_knot(1, p, 0), {a}, ctx) ==
                  jones_exact(FramedLink::unknot(0), {a}, ctx));
}

TEST_CASE("trefoil reproduces the classical Jones polynomial") {
    // normalized color-2 value of the 0-framed T(2,3) is
    // q^{-1} + q^{-3} - q^{-4}
    for (long K : {7L, 11L, 13L}) {
        CycK ctx(K);
        CycNumber lhs = jones_exact(FramedLink::torus_knot(2, 3, 0), {2}, ctx);
        CycNumber rhs = (ctx.zetaK_pow(-1) + ctx.zetaK_pow(-3) - ctx.zetaK_pow(-4)) * ctx.bracket(2);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("connected sum multiplies normalized values") {
    CycK ctx(13);
    auto tref = FramedLink::torus_knot(2, 3, 0);
    auto sum = FramedLink::connected_sum({tref, tref});
    for (long a = 1; a <= 4; ++a) {
        CycNumber j = jones_exact(tref, {a}, ctx);
        CycNumber expect = j * j * ctx.bracket(a).inverse();
        CHECK(jones_exact(sum, {a}, ctx) == expect);
    }
}

TEST_CASE("unknot series to order 2") {
    ColorSeries s = jones_series(FramedLink::unknot(0), 2);
    CHECK(s.coeff(0, {0}) == SymbolicScalar::one());
    // (pi^2/6)(1 - x) K^{-2}
    CHECK(s.coeff(2, {0}) == SymbolicScalar::pi_power(2, GaussQ(Rat(1, 6))));
    CHECK(s.coeff(2, {1}) == SymbolicScalar::pi_power(2, GaussQ(Rat(-1, 6))));
    CHECK(s.coeff(1, {0}).is_zero());
}

TEST_CASE("series match closed forms numerically at large K") {
    const int order = 6;
    struct Case {
        FramedLink link;
        std::vector<long> colors;
    };
    std::vector<Case> cases = {
        {FramedLink::unknot(2), {3}},
        {FramedLink::torus_knot(2, 3, 0), {2}},
        {FramedLink::torus_knot(2, 5, 1), {3}},
        {FramedLink::hopf_chain({1, -2}), {2, 3}},
        {FramedLink::hopf_chain({2, 0, 1}), {2, 1, 3}},
        {FramedLink::connected_sum(
             {FramedLink::torus_knot(2, 3, 0), FramedLink::torus_knot(2, 3, 0)}),
         {2}},
        {FramedLink::disjoint_union({FramedLink::unknot(1), FramedLink::torus_knot(2, 3, 2)}),
         {2, 2}},
    };
    for (const auto& c : cases) {
        ColorSeries s = jones_series(c.link, order);
        double err50 =
            (eval_series(s, c.colors, 50) - stripped_numeric(c.link, c.colors, 50)).abs().to_double();
        double err100 =
            (eval_series(s, c.colors, 100) - stripped_numeric(c.link, c.colors, 100)).abs().to_double();
        // truncation error scales like C K^{-(order+1)}: doubling K divides
        // the error by 2^{order+1}
        double expected_ratio = std::pow(2.0, order + 1);
        if (err100 > 1e-60) {
            double ratio = err50 / err100;
            CHECK(ratio > expected_ratio / 1.7);
            CHECK(ratio < expected_ratio * 1.7);
        }
        CHECK(err100 < err50);
        CHECK(err50 < 1.0);
    }
}

TEST_CASE("melvin-morton bound holds for every family") {
    std::vector<FramedLink> grid = {
        FramedLink::unknot(-2),
        FramedLink::unknot(3),
        FramedLink::torus_knot(2, 3, 0),
        FramedLink::torus_knot(2, 5, -1),
        FramedLink::torus_knot(3, 4, 2),
        FramedLink::hopf_chain({0, 0}),
        FramedLink::hopf_chain({2, 1}),
        FramedLink::hopf_chain({1, 0, -1}),
        FramedLink::disjoint_union({FramedLink::unknot(2), FramedLink::unknot(3)}),
        FramedLink::connected_sum(
            {FramedLink::torus_knot(2, 3, 1), FramedLink::torus_knot(2, 3, 0)}),
    };
    for (const auto& link : grid) {
        ColorSeries s = jones_series(link, 8);
        CHECK(check_mm_bound(s));
        auto asl = check_asl_bound(s);
        if (link.is_algebraically_split()) {
            REQUIRE(asl.has_value());
            CHECK(*asl);
        } else {
            CHECK_FALSE(asl.has_value());
        }
    }
}

TEST_CASE("knot coefficients follow the x^m K^{-2m-l} pattern") {
    // single-component: coefficient of x^m at order n vanishes unless n >= 2m
    for (const auto& link : {FramedLink::torus_knot(2, 3, 0), FramedLink::unknot(1)}) {
        ColorSeries s = jones_series(link, 8);
        for (const auto& [n, poly] : s.terms())
            for (const auto& [d, c] : poly.mono) {
                (void)c;
                CHECK(2 * d[0] <= n);
            }
    }
}

TEST_CASE("fusion ranges") {
    CHECK(fusion_range(1, 4).admissible == std::vector<long>{4});
    CHECK(fusion_range(2, 3).admissible == std::vector<long>{2, 4});
    CHECK(fusion_range(3, 3).admissible == std::vector<long>{1, 3, 5});
    for (long a1 = 1; a1 <= 5; ++a1)
        for (long a2 = 1; a2 <= 5; ++a2)
            CHECK((long)fusion_range(a1, a2).admissible.size() == std::min(a1, a2));
}

TEST_CASE("fusion identities on the 2-cable of the unknot") {
    {
        CycK ctx(5);
        auto rep = fusion_identities_check(1, 1, ctx, 2);
        CHECK(rep.all_ok());
    }
    {
        CycK ctx(11);
        auto rep = fusion_identities_check(2, 3, ctx, 2);
        CHECK(rep.all_ok());
    }
    {
        CycK ctx(7);
        auto rep = fusion_identities_check(2, 2, ctx, 2);
        CHECK(rep.all_ok());
    }
    {
        CycK ctx(13);
        for (long a1 = 1; a1 <= 3; ++a1)
            for (long a2 = 1; a2 <= 3; ++a2)
                for (long b = 1; b <= 3; ++b) CHECK(fusion_identities_check(a1, a2, ctx, b).all_ok());
    }
    CycK ctx(5);
    CHECK_THROWS_AS(fusion_identities_check(3, 3, ctx, 2), input_error);
}

TEST_CASE("scale_phase is invertible and matches the framing dressing") {
    ColorSeries s = jones_series(FramedLink::hopf_chain({2, 1}), 4);
    ColorSeries t = s.scale_phase(0, Rat(3)).scale_phase(0, Rat(-3));
    CHECK(s.equal_terms(t));
    CHECK(s.linking() == t.linking());

    // framing rule at series level: nf(f+1) = nf(f) * e^{-i pi/(2K)}
    ColorSeries f0 = jones_series(FramedLink::unknot(0), 5);
    ColorSeries f1 = jones_series(FramedLink::unknot(1), 5);
    ColorSeries dressed = f0.mul_pointwise([&] {
        ColorSeries ph = ColorSeries::factor(1, 5);
        Rat fact(1);
        for (int r = 0; r <= 5; ++r) {
            if (r > 0) fact *= r;
            ph.add_term(r, {0}, SymbolicScalar::i_pi_power(r, Rat(rat_pow(Rat(-1, 2), r) / fact)));
        }
        return ph;
    }());
    CHECK(f1.equal_terms(dressed));
}

TEST_CASE("epsilon regularization round-trips through the eps field") {
    ColorSeries s = jones_series(FramedLink::hopf_chain({0, 2}), 4);
    EpsColorSeries e = epsilon_regularize(s);
    // diagonal gained +eps
    CHECK(e.linking()[0][0] == QRat::epsilon());
    ColorSeries back = epsilon_limit(e);
    CHECK(back.equal_terms(s));
    CHECK(back.linking() == s.linking());
}

TEST_CASE("descriptor round trip and validation") {
    auto l1 = FramedLink::parse(R"({"family":"hopf_chain","framings":[2,3]})");
    CHECK(l1.ncomp() == 2);
    CHECK(FramedLink::parse(l1.descriptor()).descriptor() == l1.descriptor());
    auto l2 = FramedLink::parse("empty");
    CHECK(l2.ncomp() == 0);
    CHECK_THROWS_AS(FramedLink::parse(R"({"family":"unknot","framing":1,"bogus":2})"), input_error);
    CHECK_THROWS_AS(FramedLink::parse(R"({"family":"wheel"})"), input_error);
    CHECK_THROWS_AS(FramedLink::parse(R"({"family":"torus_knot","m":2,"p":4,"framing":0})"),
                    input_error);
    auto l3 = FramedLink::parse(
        R"({"family":"disjoint_union","children":[{"family":"unknot","framing":5},{"family":"torus_knot","m":2,"p":3,"framing":0}]})");
    CHECK(l3.ncomp() == 2);
    auto split = l3.split_components();
    REQUIRE(split.has_value());
    CHECK(split->size() == 2);
    CHECK_FALSE(FramedLink::parse(R"({"family":"hopf_chain","framings":[1,2]})")
                    .split_components()
                    .has_value());
}
