#include "cyclo/regular.hpp"

#include <algorithm>
#include <mutex>

namespace cyclo {

RegularSystem::RegularSystem(std::string name, TypeFn type_fn)
    : name_(std::move(name)), type_fn_(std::move(type_fn)) {}

int RegularSystem::type(Int p, int a) const {
    {
        std::lock_guard<std::mutex> lk(mu_);
        auto it = type_cache_.find({p, a});
        if (it != type_cache_.end()) return it->second;
    }
    int t = type_fn_(p, a);
    if (t < 1 || a % t != 0)
        throw SystemViolation(p, a, "type-not-divisor");
    // A(p^a) = {1, p^t, ..., p^a} forces every chain member to carry the
    // same type.
    for (int i = 1; i * t <= a; ++i)
        if (type_fn_(p, i * t) != t)
            throw SystemViolation(p, a, "chain-broken");
    std::lock_guard<std::mutex> lk(mu_);
    type_cache_.emplace(std::make_pair(p, a), t);
    return t;
}

std::vector<Int> RegularSystem::a_divisors(Int n) const {
    if (n < 1) throw Error("a_divisors: n must be >= 1");
    {
        std::lock_guard<std::mutex> lk(mu_);
        auto it = adiv_cache_.find(n);
        if (it != adiv_cache_.end()) return it->second;
    }
    std::vector<Int> ds{1};
    for (const auto& [p, a] : factorize(n).factors) {
        int t = type(p, a);
        size_t sz = ds.size();
        Int q = 1;
        const Int pt = ipow(p, t);
        for (int i = 1; i <= a / t; ++i) {
            q *= pt;
            for (size_t j = 0; j < sz; ++j) ds.push_back(ds[j] * q);
        }
    }
    std::sort(ds.begin(), ds.end());
    std::lock_guard<std::mutex> lk(mu_);
    adiv_cache_.emplace(n, ds);
    return ds;
}

bool RegularSystem::a_contains(Int n, Int d) const {
    if (d < 1 || n % d != 0) return false;
    // d in A(n) iff each p-part of d sits on the chain of p^a || n.
    for (const auto& [p, a] : factorize(n).factors) {
        int t = type(p, a);
        int b = 0;
        Int dd = d;
        while (dd % p == 0) {
            dd /= p;
            ++b;
        }
        if (b % t != 0) return false;
    }
    return true;
}

Int RegularSystem::gcd_a(Int j, Int n) const {
    if (n < 1) throw Error("gcd_a: n must be >= 1");
    if (j < 0) throw Error("gcd_a: j must be >= 0");
    if (j == 0) return n;
    Int r = 1;
    for (const auto& [p, a] : factorize(n).factors) {
        int t = type(p, a);
        int v = 0;
        Int jj = j;
        while (jj % p == 0 && v < a) {
            jj /= p;
            ++v;
        }
        int i = std::min(v / t, a / t);
        r *= ipow(p, i * t);
    }
    return r;
}

int RegularSystem::mobius_a(Int n) const {
    int sign = 1;
    for (const auto& [p, a] : factorize(n).factors) {
        if (type(p, a) != a) return 0;
        sign = -sign;
    }
    return sign;
}

bool RegularSystem::is_primitive(Int n) const {
    const Factorization f = factorize(n);
    return f.factors.size() == 1 && type(f.factors[0].p, f.factors[0].a) == f.factors[0].a;
}

Int RegularSystem::kappa_a(Int n) const {
    Int r = 1;
    for (const auto& [p, a] : factorize(n).factors) r *= ipow(p, type(p, a));
    return r;
}

Int RegularSystem::gamma_a(Int n) const {
    Int r = 1;
    for (const auto& [p, a] : factorize(n).factors) r *= ipow(p, a - type(p, a) + 1);
    return r;
}

Int RegularSystem::euler_phi_a(Int n) const {
    Int r = 1;
    for (const auto& [p, a] : factorize(n).factors) {
        int t = type(p, a);
        r *= ipow(p, a) - ipow(p, a - t);
    }
    return r;
}

std::vector<Int> RegularSystem::core_divisors(Int n) const {
    const Int g = gamma_a(n);
    std::vector<Int> out;
    for (Int d : divisors(n))
        if (d % g == 0) out.push_back(d);
    return out;
}

std::optional<Violation> validate_system(const RegularSystem& A, Int max_n) {
    if (max_n < 2) throw Error("validate_system: max_n must be >= 2");
    for (Int p = 2; p <= max_n; ++p) {
        if (factorize(p).factors.size() != 1 || factorize(p).factors[0].a != 1)
            continue; // not prime
        for (Int q = p; q <= max_n; q *= p) {
            int a = 0;
            for (Int qq = q; qq > 1; qq /= p) ++a;
            try {
                A.type(p, a);
            } catch (const SystemViolation& v) {
                return Violation{v.p, v.a, v.reason};
            }
            if (q > max_n / p) break;
        }
    }
    return std::nullopt;
}

mpz_class a_convolve(const RegularSystem& A, const ZFn& f, const ZFn& g, Int n) {
    mpz_class acc = 0;
    for (Int d : A.a_divisors(n)) acc += f(d) * g(n / d);
    return acc;
}

mpz_class lift_via_core(const RegularSystem& A, const ZFn& g, Int n) {
    mpz_class acc = 0;
    for (Int d : A.core_divisors(n)) acc += g(d);
    return acc;
}

const RegularSystem& system_D() {
    static const RegularSystem D("D", [](Int, int) { return 1; });
    return D;
}

const RegularSystem& system_U() {
    static const RegularSystem U("U", [](Int, int a) { return a; });
    return U;
}

const RegularSystem& system_E() {
    static const RegularSystem E("E", [](Int, int a) { return a % 2 == 0 ? 2 : a; });
    return E;
}

const RegularSystem* builtin_system(const std::string& name) {
    if (name == "D") return &system_D();
    if (name == "U") return &system_U();
    if (name == "E") return &system_E();
    return nullptr;
}

} // namespace cyclo
