#ifndef PRONICSQ_ARITH_HPP
#define PRONICSQ_ARITH_HPP

#include <cstdint>
#include <vector>

namespace pronicsq {

using u32  = std::uint32_t;
using u64  = std::uint64_t;
using i64  = std::int64_t;
using u128 = unsigned __int128;
using i128 = __int128;

namespace arith {

// Exact integer square root: returns r with r*r <= n < (r+1)*(r+1).
// Never trusts the floating-point seed; the result is corrected exactly.
u64 isqrt(u64 n) noexcept;

bool is_perfect_square(u64 n) noexcept;

// Deterministic Miller-Rabin, correct for every 64-bit n. n <= 1 is not prime.
bool is_prime(u64 n) noexcept;

u64 mulmod(u64 a, u64 b, u64 m) noexcept;
u64 powmod(u64 base, u64 exp, u64 m) noexcept;

struct PrimePower {
    u64 prime;
    unsigned exponent;
};

// Complete prime factorization. factors is sorted by prime, exponents >= 1,
// and the recomposed product equals value. value == 1 <=> factors empty.
struct Factorization {
    u64 value = 1;
    std::vector<PrimePower> factors;

    u64 divisor_count() const noexcept;
};

// Trial division by primes below 10^4, then Brent's cycle method on the
// remaining cofactors with primality checks on every piece. Deterministic.
Factorization factorize(u64 n);

// All divisors of the factorized value, sorted ascending.
std::vector<u64> divisors(const Factorization& f);

struct DivisorClassCounts {
    u64 mod1;  // #divisors == 1 (mod 4)
    u64 mod3;  // #divisors == 3 (mod 4)
};

DivisorClassCounts divisor_class_counts(u64 n);

}  // namespace arith
}  // namespace pronicsq

#endif
