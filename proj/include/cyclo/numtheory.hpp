#pragma once

#include <cstdint>
#include <vector>

#include "cyclo/errors.hpp"

namespace cyclo {

struct PrimePower {
    Int p;
    int a;
    bool operator==(const PrimePower&) const = default;
};

// Canonical prime factorization of n >= 1. Primes strictly increasing, all
// exponents >= 1; n == 1 has an empty factor list.
struct Factorization {
    Int n = 1;
    std::vector<PrimePower> factors;
};

// Deterministic trial division with a 2-3-5 wheel. Intended for n up to ~1e7;
// results are memoized below a configurable bound.
Factorization factorize(Int n);

// All positive divisors of n, ascending.
std::vector<Int> divisors(Int n);

Int euler_phi(Int n);
Int tau(Int n);
int mobius(Int n);    // in {-1,0,1}
int liouville(Int n); // (-1)^Omega(n)
int omega_small(Int n); // number of distinct prime divisors
int omega_big(Int n);   // number of prime divisors with multiplicity
Int squarefree_kernel(Int n); // product of distinct primes dividing n

// True iff every exponent in the prime factorization of n is odd
// (vacuously true for n = 1).
bool is_exponentially_odd(Int n);

// p^a for small exponents, no overflow checking beyond desk scale.
Int ipow(Int base, int exp);

// Memoization caps: values <= limit are cached (thread-safe), larger ones are
// recomputed on each call.
void set_numtheory_cache_limit(Int limit);

} // namespace cyclo
