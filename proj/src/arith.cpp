#include "pronicsq/arith.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace pronicsq::arith {

u64 isqrt(u64 n) noexcept {
    if (n == 0) return 0;
    // Floating seed, then exact correction. The seed is within a couple of
    // units of the truth for any 64-bit n.
    u64 r = static_cast<u64>(std::sqrt(static_cast<double>(n)));
    while (r > 0 && static_cast<u128>(r) * r > n) --r;
    while (static_cast<u128>(r + 1) * (r + 1) <= n) ++r;
    return r;
}

bool is_perfect_square(u64 n) noexcept {
    const u64 r = isqrt(n);
    return r * r == n;
}

u64 mulmod(u64 a, u64 b, u64 m) noexcept {
    return static_cast<u64>(static_cast<u128>(a) * b % m);
}

u64 powmod(u64 base, u64 exp, u64 m) noexcept {
    u64 result = 1 % m;
    base %= m;
    while (exp > 0) {
        if (exp & 1) result = mulmod(result, base, m);
        base = mulmod(base, base, m);
        exp >>= 1;
    }
    return result;
}

bool is_prime(u64 n) noexcept {
    if (n < 2) return false;
    for (u64 p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL,
                  29ULL, 31ULL, 37ULL}) {
        if (n % p == 0) return n == p;
    }
    if (n < 41 * 41) return true;

    const int r = std::countr_zero(n - 1);
    const u64 d = (n - 1) >> r;

    // This witness set decides primality for every n < 2^64.
    for (u64 a : {2ULL, 325ULL, 9375ULL, 28178ULL, 450775ULL, 9780504ULL,
                  1795265022ULL}) {
        u64 x = powmod(a % n, d, n);
        if (x == 0 || x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 1; i < r; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

namespace {

constexpr u32 kTrialLimit = 10000;

const std::vector<u32>& small_primes() {
    static const std::vector<u32> primes = [] {
        std::vector<bool> composite(kTrialLimit + 1, false);
        std::vector<u32> ps;
        for (u32 i = 2; i <= kTrialLimit; ++i) {
            if (composite[i]) continue;
            ps.push_back(i);
            for (u64 j = static_cast<u64>(i) * i; j <= kTrialLimit; j += i)
                composite[j] = true;
        }
        return ps;
    }();
    return primes;
}

// Brent's variant of the rho cycle method with batched gcds. The polynomial
// constant walks 1, 2, 3, ... so results are deterministic and the function
// is safe to call from any number of threads.
u64 pollard_brent(u64 n) {
    for (u64 c = 1;; ++c) {
        auto step = [&](u64 v) {
            u64 s = mulmod(v, v, n) + c;
            if (s >= n) s -= n;
            return s;
        };

        const u64 batch = 128;
        u64 x = 2, y = 2, ys = 2, d = 1, q = 1, r = 1;
        while (d == 1) {
            x = y;
            for (u64 i = 0; i < r; ++i) y = step(y);
            for (u64 k = 0; k < r && d == 1; k += batch) {
                ys = y;
                const u64 lim = std::min(batch, r - k);
                for (u64 i = 0; i < lim; ++i) {
                    y = step(y);
                    q = mulmod(q, x > y ? x - y : y - x, n);
                }
                d = std::gcd(q, n);
            }
            r <<= 1;
        }
        if (d == n) {
            do {
                ys = step(ys);
                d = std::gcd(x > ys ? x - ys : ys - x, n);
            } while (d == 1);
        }
        if (d != n) return d;
        // cycle collapsed onto n itself; retry with the next constant
    }
}

}  // namespace

u64 Factorization::divisor_count() const noexcept {
    u64 tau = 1;
    for (const auto& pp : factors) tau *= pp.exponent + 1;
    return tau;
}

Factorization factorize(u64 n) {
    if (n == 0) throw std::invalid_argument("factorize: n must be positive");
    Factorization out;
    out.value = n;
    if (n == 1) return out;

    std::vector<PrimePower> acc;
    auto record = [&acc](u64 p) {
        for (auto& pp : acc) {
            if (pp.prime == p) {
                ++pp.exponent;
                return;
            }
        }
        acc.push_back({p, 1});
    };

    for (u32 p : small_primes()) {
        if (static_cast<u64>(p) * p > n) break;
        while (n % p == 0) {
            record(p);
            n /= p;
        }
    }

    if (n > 1) {
        std::vector<u64> pending{n};
        while (!pending.empty()) {
            const u64 v = pending.back();
            pending.pop_back();
            if (v == 1) continue;
            if (v <= kTrialLimit || is_prime(v)) {
                record(v);
                continue;
            }
            const u64 root = isqrt(v);
            if (root * root == v) {
                pending.push_back(root);
                pending.push_back(root);
                continue;
            }
            const u64 d = pollard_brent(v);
            pending.push_back(d);
            pending.push_back(v / d);
        }
    }

    std::sort(acc.begin(), acc.end(),
              [](const PrimePower& a, const PrimePower& b) { return a.prime < b.prime; });
    out.factors = std::move(acc);
    return out;
}

std::vector<u64> divisors(const Factorization& f) {
    std::vector<u64> ds{1};
    for (const auto& pp : f.factors) {
        const std::size_t base = ds.size();
        u64 pe = 1;
        for (unsigned e = 1; e <= pp.exponent; ++e) {
            pe *= pp.prime;
            for (std::size_t i = 0; i < base; ++i) ds.push_back(ds[i] * pe);
        }
    }
    std::sort(ds.begin(), ds.end());
    return ds;
}

DivisorClassCounts divisor_class_counts(u64 n) {
    const Factorization f = factorize(n);
    // Multiplicative over odd prime powers; powers of 2 only contribute even
    // divisors, which belong to neither residue class.
    u64 c1 = 1, c3 = 0;
    for (const auto& pp : f.factors) {
        if (pp.prime == 2) continue;
        u64 a1, a3;
        if (pp.prime % 4 == 1) {
            a1 = pp.exponent + 1;
            a3 = 0;
        } else {
            // p^j alternates 1, 3, 1, ... (mod 4)
            a1 = pp.exponent / 2 + 1;
            a3 = (pp.exponent + 1) / 2;
        }
        const u64 n1 = c1 * a1 + c3 * a3;
        const u64 n3 = c1 * a3 + c3 * a1;
        c1 = n1;
        c3 = n3;
    }
    return {c1, c3};
}

}  // namespace pronicsq::arith
