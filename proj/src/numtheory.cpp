#include "cyclo/numtheory.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <unordered_map>

namespace cyclo {

namespace {

std::atomic<Int> g_cache_limit{10'000'000};

// increments between consecutive integers coprime to 2*3*5, starting from 7
constexpr int kWheel[] = {4, 2, 4, 2, 4, 6, 2, 6};

Factorization factorize_uncached(Int n) {
    Factorization f;
    f.n = n;
    Int m = n;
    auto strip = [&](Int p) {
        if (m % p != 0) return;
        int a = 0;
        while (m % p == 0) {
            m /= p;
            ++a;
        }
        f.factors.push_back({p, a});
    };
    strip(2);
    strip(3);
    strip(5);
    Int p = 7;
    int w = 0;
    while (p * p <= m) {
        strip(p);
        p += kWheel[w];
        w = (w + 1) & 7;
    }
    if (m > 1) f.factors.push_back({m, 1});
    return f;
}

template <class V>
class Memo {
  public:
    template <class F>
    V get(Int n, F&& compute) {
        if (n > g_cache_limit.load(std::memory_order_relaxed))
            return compute(n);
        {
            std::lock_guard<std::mutex> lk(mu_);
            auto it = map_.find(n);
            if (it != map_.end()) return it->second;
        }
        V v = compute(n);
        std::lock_guard<std::mutex> lk(mu_);
        map_.emplace(n, v);
        return v;
    }

  private:
    std::mutex mu_;
    std::unordered_map<Int, V> map_;
};

Memo<Factorization>& factor_memo() {
    static Memo<Factorization> m;
    return m;
}

Memo<std::vector<Int>>& divisor_memo() {
    static Memo<std::vector<Int>> m;
    return m;
}

Memo<Int>& phi_memo() {
    static Memo<Int> m;
    return m;
}

} // namespace

void set_numtheory_cache_limit(Int limit) {
    g_cache_limit.store(limit, std::memory_order_relaxed);
}

Factorization factorize(Int n) {
    if (n < 1) throw Error("factorize: n must be >= 1");
    return factor_memo().get(n, factorize_uncached);
}

std::vector<Int> divisors(Int n) {
    if (n < 1) throw Error("divisors: n must be >= 1");
    return divisor_memo().get(n, [](Int m) {
        Factorization f = factorize(m);
        std::vector<Int> ds{1};
        for (const auto& [p, a] : f.factors) {
            size_t sz = ds.size();
            Int pk = 1;
            for (int i = 1; i <= a; ++i) {
                pk *= p;
                for (size_t j = 0; j < sz; ++j) ds.push_back(ds[j] * pk);
            }
        }
        std::sort(ds.begin(), ds.end());
        return ds;
    });
}

Int euler_phi(Int n) {
    return phi_memo().get(n, [](Int m) {
        Int r = 1;
        for (const auto& [p, a] : factorize(m).factors)
            r *= ipow(p, a) - ipow(p, a - 1);
        return r;
    });
}

Int tau(Int n) {
    Int r = 1;
    for (const auto& pp : factorize(n).factors) r *= pp.a + 1;
    return r;
}

int mobius(Int n) {
    const Factorization f = factorize(n);
    for (const auto& pp : f.factors)
        if (pp.a > 1) return 0;
    return f.factors.size() % 2 == 0 ? 1 : -1;
}

int liouville(Int n) {
    return omega_big(n) % 2 == 0 ? 1 : -1;
}

int omega_small(Int n) {
    return static_cast<int>(factorize(n).factors.size());
}

int omega_big(Int n) {
    int r = 0;
    for (const auto& pp : factorize(n).factors) r += pp.a;
    return r;
}

Int squarefree_kernel(Int n) {
    Int r = 1;
    for (const auto& pp : factorize(n).factors) r *= pp.p;
    return r;
}

bool is_exponentially_odd(Int n) {
    for (const auto& pp : factorize(n).factors)
        if (pp.a % 2 == 0) return false;
    return true;
}

Int ipow(Int base, int exp) {
    Int r = 1;
    while (exp-- > 0) r *= base;
    return r;
}

} // namespace cyclo
