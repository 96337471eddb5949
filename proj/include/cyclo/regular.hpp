#pragma once

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "cyclo/numtheory.hpp"

namespace cyclo {

// Type function of a regular divisor system: maps a prime power p^a (a >= 1)
// to its type t = t_A(p^a), a divisor of a such that the A-divisors of p^a
// form the chain {1, p^t, p^2t, ..., p^a}.
using TypeFn = std::function<int(Int p, int a)>;

struct Violation {
    Int p;
    int a;
    std::string reason; // "type-not-divisor" or "chain-broken"
};

// A regular system of divisors, specified only by its type function. A(n) is
// always synthesized from the per-prime-power chains, which makes regularity
// constructive: the two Narkiewicz conditions reduce to local checks on
// (p, a), performed lazily on first use of each prime power.
//
// Immutable after construction; the A(n) cache is mutex-guarded.
class RegularSystem {
  public:
    RegularSystem(std::string name, TypeFn type_fn);

    const std::string& name() const { return name_; }

    // t_A(p^a); throws SystemViolation if the type function breaks either
    // local regularity condition at (p, a).
    int type(Int p, int a) const;

    // A(n), ascending. Always contains 1 and n, closed under d -> n/d.
    std::vector<Int> a_divisors(Int n) const;

    bool a_contains(Int n, Int d) const;

    // (j, n)_A = max{d : d | j, d in A(n)}; j = 0 (and any j = 0 mod n)
    // yields n.
    Int gcd_a(Int j, Int n) const;

    // mu_A(n): -1 on A-primitive prime powers, 0 on other prime powers,
    // multiplicative, mu_A(1) = 1.
    int mobius_a(Int n) const;

    // n > 1 with A(n) = {1, n}; necessarily a prime power of type a.
    bool is_primitive(Int n) const;

    Int kappa_a(Int n) const; // prod p^t over p^a || n
    Int gamma_a(Int n) const; // n kappa(n) / kappa_A(n) = prod p^(a-t+1)

    // #{1 <= j <= n : (j,n)_A = 1} via the closed form prod (p^a - p^(a-t)).
    Int euler_phi_a(Int n) const;

    // {d : d | n, gamma_A(n) | d}, ascending.
    std::vector<Int> core_divisors(Int n) const;

  private:
    std::string name_;
    TypeFn type_fn_;
    mutable std::mutex mu_;
    mutable std::map<std::pair<Int, int>, int> type_cache_;
    mutable std::map<Int, std::vector<Int>> adiv_cache_;
};

// Checks both regularity conditions for every prime power p^a <= max_n and
// reports the first violation, if any.
std::optional<Violation> validate_system(const RegularSystem& A, Int max_n);

using ZFn = std::function<mpz_class(Int)>;

// (f *_A g)(n) = sum over d in A(n) of f(d) g(n/d).
mpz_class a_convolve(const RegularSystem& A, const ZFn& f, const ZFn& g, Int n);

// sum of g over the core divisors {d : d | n, gamma_A(n) | d}. This is the
// lifting g -> g_A determined by sum_{d|n} g(d) = sum_{d in A(n)} g_A(d).
mpz_class lift_via_core(const RegularSystem& A, const ZFn& g, Int n);

// Built-in systems: D (all divisors, t = 1), U (unitary divisors, t = a),
// E (t = 2 for even a, t = a for odd a).
const RegularSystem& system_D();
const RegularSystem& system_U();
const RegularSystem& system_E();

// Lookup by name "D" / "U" / "E"; nullptr if unknown.
const RegularSystem* builtin_system(const std::string& name);

} // namespace cyclo
