#ifndef PRONICSQ_SSET_HPP
#define PRONICSQ_SSET_HPP

#include <optional>
#include <vector>

#include "pronicsq/arith.hpp"

namespace pronicsq::sset {

// Largest u for which 4u^2 + 1 fits in 64 bits.
inline constexpr u64 kMaxSupportedU = 2147483647ULL;

// Certificate that u^2 + t^2 = n(n+1) with 1 <= t <= t_max(u).
struct Witness {
    u64 u;
    u64 t;
    u64 n;

    friend bool operator==(const Witness&, const Witness&) = default;
};

// Certificate that 4u^2 + 1 = (4m+1)(4k+1) with 1 <= m < k.
struct FactorPair {
    u64 u;
    u64 m;
    u64 k;

    u64 factor_small() const noexcept { return 4 * m + 1; }
    u64 factor_large() const noexcept { return 4 * k + 1; }

    friend bool operator==(const FactorPair&, const FactorPair&) = default;
};

// floor((u^2 - 6) / 5) when that is >= 1, otherwise no t is admissible.
// The bound keeps t strictly below u^2, so the tautological pairing t = u^2
// never qualifies.
std::optional<u64> t_max(u64 u);

// Minimal-t witness if 4u^2 + 1 is composite, empty otherwise. Routed through
// the primality test and factorization; the divisor closest to sqrt(4u^2+1)
// yields the minimal admissible t.
std::optional<Witness> membership(u64 u);

// Reference search: walk t = 1..t_max(u) and test 1 + 4(u^2 + t^2) for being
// an odd perfect square. Independent of the factorization route.
std::optional<Witness> membership_bruteforce(u64 u);

// Same as membership() but reuses an already computed factorization of
// 4u^2 + 1 (used by range scans to avoid factoring twice).
std::optional<Witness> minimal_witness(u64 u, const arith::Factorization& f);

// m = ((2n+1) - (2t+1)) / 4, k = t + m. Throws std::invalid_argument when the
// triple is not a valid witness or the mod-4 congruence fails.
FactorPair witness_to_factorization(const Witness& w);

// t = k - m, n recovered from the discriminant 1 + 4(u^2 + t^2) (and equal to
// m + k). Throws std::invalid_argument when (4m+1)(4k+1) != 4u^2 + 1.
Witness factorization_to_witness(const FactorPair& f);

// One pair per divisor splitting d * (N/d) = 4u^2 + 1 with 1 < d <= sqrt(N),
// sorted by m ascending. Empty exactly when 4u^2 + 1 is prime. Throws
// std::logic_error if any divisor is congruent to 3 (mod 4); no such divisor
// can exist, so hitting that path means the arithmetic underneath is broken.
std::vector<FactorPair> all_factor_pairs(u64 u);

struct LemmaReport {
    bool same_parity;            // u and t share parity
    bool n_mod4_matches_parity;  // odd pair -> n == 1 (mod 4), even -> n == 0
    bool no_3_mod4;              // neither n nor n+1 is 3 (mod 4)
    bool case1_diff_zero_mod4;   // (2n+1) - (2t+1) == 0 (mod 4)
    bool case2_diff_two_mod4;    // (2n+1) - (2t+3) == 2 (mod 4)

    bool all_hold() const noexcept {
        return same_parity && n_mod4_matches_parity && no_3_mod4 &&
               case1_diff_zero_mod4 && case2_diff_two_mod4;
    }
};

// Requires only u^2 + t^2 = n(n+1); the t bound is not assumed, so the
// tautological triple (u, u^2, u^2) can be probed as well.
LemmaReport check_lemmas(const Witness& w);

// Full Witness validation (equation, bound, parity and congruence rules).
void validate_witness(const Witness& w);
bool is_valid_witness(const Witness& w) noexcept;

// Full FactorPair validation (m < k, product identity, k bound (u^2-1)/5).
void validate_factor_pair(const FactorPair& f);
bool is_valid_factor_pair(const FactorPair& f) noexcept;

}  // namespace pronicsq::sset

#endif
