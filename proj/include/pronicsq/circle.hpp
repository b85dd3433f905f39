#ifndef PRONICSQ_CIRCLE_HPP
#define PRONICSQ_CIRCLE_HPP

#include <span>
#include <vector>

#include "pronicsq/arith.hpp"

namespace pronicsq::circle {

// d must stay small enough that the lattice count ~ pi*d fits in 64 bits.
inline constexpr u64 kMaxCircleD = 1000000000000000000ULL;

// A(d): nonzero lattice points (x, y) with x^2 + y^2 < d, i.e. the cumulative
// sum of r2(m) for 1 <= m <= d-1. Row summation over x, OpenMP across rows.
u64 circle_count(u64 d);

// Same row summation, single-threaded. Reference for the parallel kernel.
u64 circle_count_serial(u64 d);

// Slow route: sum r2(m) term by term via divisor classes. Small-d oracle.
u64 circle_count_r2sum(u64 d);

struct CircleSample {
    u64 d;
    u64 lattice_count;           // A(d)
    long double average;         // A(d) / d
    long double octant_average;  // A(d) / (8d)
    long double deviation;       // A(d) / d - pi
};

CircleSample circle_sample(u64 d);

std::vector<CircleSample> circle_series(std::span<const u64> ds);

struct OctantComparison {
    long double octant_average;
    bool below_half;  // A(d)/(8d) < 1/2
};

// Requires d >= 100.
OctantComparison octant_comparison(u64 d);

}  // namespace pronicsq::circle

#endif
