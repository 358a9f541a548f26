#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

namespace qtop {

using Int = mpz_class;
using Rat = mpq_class;

using RatVec = std::vector<Rat>;
using RatMat = std::vector<std::vector<Rat>>;

inline int sign(const Rat& x) { return sgn(x); }
inline Rat rat_abs(const Rat& x) { return x < 0 ? Rat(-x) : x; }

Rat rat_pow(const Rat& base, long e);
std::string rat_str(const Rat& x);
Rat rat_parse(const std::string& s);

Int factorial(unsigned n);
// (-1)!! = 1, 1!! = 1, n!! = n (n-2)!! ...
Int double_factorial(long n);
Int binomial(unsigned n, unsigned k);

bool is_prime(long n);
long mod_pow(long base, long e, long m);
// inverse of a mod m for prime m; throws if a = 0 mod m
long mod_inverse(long a, long m);
// canonical representative in [0, m)
long mod_reduce(const Rat& x, long m);

// n = s^2 * f with f squarefree, n > 0
void extract_square(const Int& n, Int& s, Int& f);

Rat det(RatMat m);
// signature of a symmetric rational matrix (nondegenerate not required)
int signature(RatMat m);
// Solve a x = b exactly, a square nonsingular.
RatVec solve_linear(RatMat a, RatVec b);
// Least structured solve for (possibly overdetermined) consistent systems:
// returns coordinates if a x = b has a solution, nullopt otherwise.
std::optional<RatVec> solve_consistent(RatMat a, RatVec b);

// Faulhaber: coefficients (ascending in n) of the polynomial
// T_j(n) = sum_{k=0}^{n-1} k^j, degree j+1.
RatVec faulhaber(unsigned j);
// Coefficients (ascending in a) of S_r(a) = sum_{k=0}^{a-1} (a-1-2k)^r.
// Vanishes identically for odd r; for even r only odd powers of a survive.
RatVec symmetric_power_sum(unsigned r);

} // namespace qtop
