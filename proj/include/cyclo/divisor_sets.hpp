#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "cyclo/regular.hpp"

namespace cyclo {

// A set S of positive integers given by its characteristic function rho_S.
// claims_multiplicative flags sets whose characteristic function is
// multiplicative (then 1 in S and mu_{A,S} takes values in {-1,0,1} on prime
// powers); non-multiplicative sets are fully supported, the flag only gates
// fast paths and validator checks.
class DivisorValueSet {
  public:
    DivisorValueSet(std::string name, std::function<bool(Int)> member,
                    bool claims_multiplicative)
        : name_(std::move(name)),
          member_(std::move(member)),
          claims_multiplicative_(claims_multiplicative) {}

    const std::string& name() const { return name_; }
    bool member(Int m) const { return member_(m); }
    int rho(Int m) const { return member_(m) ? 1 : 0; }
    bool claims_multiplicative() const { return claims_multiplicative_; }

  private:
    std::string name_;
    std::function<bool(Int)> member_;
    bool claims_multiplicative_;
};

const DivisorValueSet& set_one();     // {1}
const DivisorValueSet& set_non_one(); // N \ {1}
const DivisorValueSet& set_squares(); // {m^2}
const DivisorValueSet& set_primes(); // primes

DivisorValueSet explicit_set(std::vector<Int> members);

// Lookup by name "one" / "nonone" / "squares" / "primes"; nullptr if unknown.
const DivisorValueSet* builtin_set(const std::string& name);

// Spot-checks member(1) = true and member(mn) = member(m) member(n) for
// coprime m, n up to the bound; returns a violating (m, n) if found.
std::optional<std::pair<Int, Int>> validate_multiplicative(const DivisorValueSet& S,
                                                           Int bound);

// mu_{A,S}(n) = sum over d in A(n) of mu_A(d) rho_S(n/d). Satisfies
// sum_{d in A(n)} mu_{A,S}(d) = rho_S(n). Unbounded for non-multiplicative S.
mpz_class mobius_as(const RegularSystem& A, const DivisorValueSet& S, Int n);

// Inverse of mu_{A,S} under A-convolution, computed by recursion over A(n).
// Requires 1 in S (throws SetExcludesOne otherwise).
mpz_class h_as(const RegularSystem& A, const DivisorValueSet& S, Int n);

// #{1 <= j <= n : (j,n)_A in S} via sum over d in A(n) of d mu_{A,S}(n/d).
Int euler_phi_as(const RegularSystem& A, const DivisorValueSet& S, Int n);

// Generalized Ramanujan sum c_{A,S,n}(k) = sum over j <= n with (j,n)_A in S
// of zeta_n^(jk), evaluated exactly as sum over d in A(n), d | (k,n)_A of
// d mu_{A,S}(n/d). c(0) = phi_{A,S}(n), c(1) = mu_{A,S}(n).
mpz_class ramanujan_as(const RegularSystem& A, const DivisorValueSet& S, Int n, Int k);

// Classical Ramanujan sum c_n(k).
Int ramanujan_classical(Int n, Int k);

// c_{A,n}(k) via the Holder-type closed form
// phi_A(n) mu_A(n/(k,n)_A) / phi_A(n/(k,n)_A); the division is exact
// (InternalInconsistency otherwise).
Int ramanujan_a_holder(const RegularSystem& A, Int n, Int k);

// c_{A,n}(k) as the sum of classical c_d(k) over the core divisors
// {d : d | n, gamma_A(n) | d}.
Int ramanujan_via_gamma(const RegularSystem& A, Int n, Int k);

} // namespace cyclo
