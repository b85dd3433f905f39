#ifndef PRONICSQ_TWOSQUARES_HPP
#define PRONICSQ_TWOSQUARES_HPP

#include <vector>

#include "pronicsq/arith.hpp"

namespace pronicsq::twosq {

// Unordered representation target = a^2 + b^2 with 1 <= a <= b.
struct TwoSquareRep {
    u64 a;
    u64 b;
    u64 target;

    friend bool operator==(const TwoSquareRep&, const TwoSquareRep&) = default;
};

// All representations of n as a sum of two positive squares, a <= b, sorted
// by a. Computed from the factorization of n by composing Gaussian-prime
// representations; agrees exactly with two_square_reps_bruteforce.
std::vector<TwoSquareRep> two_square_reps(u64 n);

// The defining enumeration: a from 1 while 2a^2 <= n, keep a when n - a^2 is
// a perfect square. Kept as the reference the fast path is tested against.
std::vector<TwoSquareRep> two_square_reps_bruteforce(u64 n);

// Representations of the pronic target n(n+1).
std::vector<TwoSquareRep> pronic_reps(u64 n);

// Number of ordered signed lattice pairs (x, y) with x^2 + y^2 = m,
// computed as 4 * (d1 - d3) over the divisor classes of m.
u64 r2(u64 m);

// Largest n such that n(n+1) still fits in 64 bits.
inline constexpr u64 kMaxPronicN = 4294967295ULL;

}  // namespace pronicsq::twosq

#endif
