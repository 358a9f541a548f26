#include "qtop/scalar.hpp"

#include "qtop/errors.hpp"
#include "qtop/numeric.hpp"

#include <doctest.h>

#include <random>

using namespace qtop;

namespace {

std::mt19937 rng(20240817);

Rat random_rat() {
    std::uniform_int_distribution<int> num(-40, 40);
    std::uniform_int_distribution<int> den(1, 12);
    return Rat(num(rng), den(rng));
}

SymbolicScalar random_scalar() {
    std::uniform_int_distribution<int> deg(-3, 3);
    std::uniform_int_distribution<int> nterms(0, 3);
    SymbolicScalar s;
    int n = nterms(rng);
    for (int i = 0; i < n; ++i)
        s += SymbolicScalar::pi_power(deg(rng), GaussQ(random_rat(), random_rat()));
    return s;
}

Prefactor random_prefactor() {
    std::uniform_int_distribution<int> oct(0, 7);
    std::uniform_int_distribution<int> half(-4, 4);
    std::uniform_int_distribution<int> rad(1, 30);
    std::uniform_int_distribution<int> rho_n(1, 9);
    return Prefactor(oct(rng), half(rng), half(rng), Rat(rad(rng)), Rat(rho_n(rng), rho_n(rng)));
}

} // namespace

TEST_CASE("scalar arithmetic matches the stated examples") {
    // (pi^2/6) + (pi^2/3) = pi^2/2
    auto a = SymbolicScalar::pi_power(2, GaussQ(Rat(1, 6)));
    auto b = SymbolicScalar::pi_power(2, GaussQ(Rat(1, 3)));
    CHECK(a + b == SymbolicScalar::pi_power(2, GaussQ(Rat(1, 2))));

    // i * i = -1
    auto i = SymbolicScalar::i_unit();
    CHECK(i * i == SymbolicScalar(Rat(-1)));

    // (pi 2/3) * (pi^-1 3/2) = 1
    auto c = SymbolicScalar::pi_power(1, GaussQ(Rat(2, 3)));
    auto d = SymbolicScalar::pi_power(-1, GaussQ(Rat(3, 2)));
    CHECK(c * d == SymbolicScalar::one());
}

TEST_CASE("scalar arithmetic is exact on random values") {
    for (int t = 0; t < 200; ++t) {
        SymbolicScalar a = random_scalar(), b = random_scalar();
        CHECK((a + b) - b == a);
        GaussQ g(random_rat(), random_rat());
        if (!g.is_zero()) CHECK(a.times(g).div(g) == a);
    }
}

TEST_CASE("rational predicate and round-trip") {
    SymbolicScalar r(Rat(7, 5));
    CHECK(r.is_rational());
    CHECK(r.as_rational() == Rat(7, 5));
    CHECK(SymbolicScalar::zero().is_rational());
    CHECK(SymbolicScalar::zero().as_rational() == 0);
    CHECK_FALSE(SymbolicScalar::i_unit().is_rational());
    CHECK_FALSE(SymbolicScalar::pi_power(2, GaussQ(Rat(1))).is_rational());
    CHECK_THROWS_AS(SymbolicScalar::i_unit().as_rational(), math_error);
}

TEST_CASE("canonical text rendering") {
    CHECK(SymbolicScalar::pi_power(2, GaussQ(Rat(1, 6))).str() == "1/6*pi^2");
    CHECK(SymbolicScalar(Rat(-3)).str() == "-3");
    SymbolicScalar mix = SymbolicScalar(Rat(1, 2)) + SymbolicScalar::pi_power(-1, GaussQ(Rat(-3)));
    CHECK(mix.str() == "-3*pi^-1 + 1/2");
    CHECK(SymbolicScalar::i_unit().str() == "i");
}

TEST_CASE("prefactor examples") {
    // sqrt2 * sqrt2 -> rho = 2
    Prefactor s2(0, 1, 0);
    Prefactor p = s2 * s2;
    CHECK(p.rho() == 2);
    CHECK(p.radicand() == 1);
    CHECK(p.half2() == 0);

    // e^{i pi/4} eight times is trivial
    Prefactor oct(1, 0, 0);
    Prefactor acc;
    for (int k = 0; k < 8; ++k) acc = acc * oct;
    CHECK(acc.is_trivial());

    // K^{1/2} * K^{-3/2} -> halfK = -2
    Prefactor k1(0, 0, 1), k3(0, 0, -3);
    CHECK((k1 * k3).halfK() == -2);

    CHECK(Prefactor::identity().is_trivial());
    CHECK_FALSE(Prefactor(4, 0, 0).is_trivial());

    // unreduced radicand is an invariant violation
    Prefactor bad = Prefactor::raw_unchecked(0, 0, 0, Rat(4), Rat(1));
    CHECK_THROWS_AS(bad.is_trivial(), math_error);
}

TEST_CASE("prefactor square extraction") {
    Prefactor p(0, 0, 0, Rat(18));
    // sqrt(18) = 3 sqrt(2) -> rho 3, one unit of sqrt2
    CHECK(p.rho() == 3);
    CHECK(p.radicand() == 1);
    CHECK(p.half2() == 1);

    Prefactor q(0, 0, 0, Rat(1, 2));
    // sqrt(1/2) = 2^{-1/2} = (1/2) sqrt(2)
    CHECK(q.rho() == Rat(1, 2));
    CHECK(q.half2() == 1);
    CHECK(q.radicand() == 1);

    Prefactor r(0, 0, 0, Rat(12, 25));
    // sqrt(12/25) = (2/5) sqrt(3)
    CHECK(r.rho() == Rat(2, 5));
    CHECK(r.radicand() == 3);
}

TEST_CASE("prefactor multiplication is associative and commutative") {
    for (int t = 0; t < 100; ++t) {
        Prefactor a = random_prefactor(), b = random_prefactor(), c = random_prefactor();
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * b == b * a);
        CHECK((a * a.inverse()).is_trivial());
    }
}

TEST_CASE("prefactor numeric value is consistent with its factorization") {
    for (int t = 0; t < 20; ++t) {
        Prefactor a = random_prefactor(), b = random_prefactor();
        BigComplex lhs = eval_numeric(a * b, 7);
        BigComplex rhs = eval_numeric(a, 7) * eval_numeric(b, 7);
        CHECK((lhs - rhs).abs().to_double() < 1e-60);
    }
}

TEST_CASE("fold_even splits a prefactor into scalar times residue") {
    for (int t = 0; t < 50; ++t) {
        Prefactor p = random_prefactor();
        PrefactorFold f = fold_even(p);
        CHECK(f.residue.octant() <= 1);
        CHECK(f.residue.half2() <= 1);
        CHECK(f.residue.half2() >= 0);
        CHECK(f.residue.halfK() <= 1);
        CHECK(f.residue.halfK() >= 0);
        CHECK(f.residue.rho() == 1);
        long K = 11;
        BigComplex lhs = eval_numeric(p, K);
        BigComplex rhs = eval_numeric(f.residue, K) * BigComplex(f.scalar) *
                         BigFloat(Rat(K)).pow_si(f.k_shift);
        CHECK((lhs - rhs).abs().to_double() < 1e-60);
    }
}
