#ifndef PRONICSQ_SURVEY_HPP
#define PRONICSQ_SURVEY_HPP

#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "pronicsq/sset.hpp"
#include "pronicsq/twosquares.hpp"

namespace pronicsq::survey {

struct ScanOptions {
    // Exhaustive t-loop check for every u up to this value.
    u64 oracle_cutoff = 2000;
    // Above the cutoff, re-check every stride-th u against the t-loop
    // (0 disables the periodic checks).
    u64 crosscheck_stride = 997;
    // Skip a periodic check when the t-loop would exceed this many steps;
    // the loop is Theta(u^2/5), which stops being affordable mid-scan.
    u64 max_bruteforce_t = 50000000;
};

struct ScanRow {
    u64 u;
    bool composite;
    std::optional<sset::Witness> witness;  // minimal-t certificate
    u64 pair_count;                        // #divisor splittings of 4u^2+1
};

struct RunSpan {
    u64 start;
    u64 length;

    friend bool operator==(const RunSpan&, const RunSpan&) = default;
};

struct ScanReport {
    u64 lo = 0;
    u64 hi = 0;
    u64 prime_count = 0;
    u64 composite_count = 0;
    // Every u where the two routes disagreed or a certificate failed to
    // validate. Must be empty.
    std::vector<u64> mismatches;
    RunSpan longest_s_run{0, 0};
    // pair_count -> how many distinct composite u have that many splittings
    std::map<u64, u64> multiplicity_histogram;
    // composite_count / range size, kept exact
    u64 s_density_num = 0;
    u64 s_density_den = 1;

    double s_density() const noexcept {
        return static_cast<double>(s_density_num) / static_cast<double>(s_density_den);
    }
};

using RowSink = std::function<void(const ScanRow&)>;

// Classifies every u in [lo, hi] by both routes (primality of 4u^2+1 and
// witness existence), aggregates the report, and streams rows to sink in
// ascending u order when one is given. Results do not depend on the number
// of worker threads.
ScanReport scan(u64 lo, u64 hi, const ScanOptions& options = {},
                const RowSink& sink = nullptr);

// Maximal runs of consecutive u with 4u^2+1 composite, for u in [1, bound],
// sorted by length descending (ties by start ascending). Descriptive only:
// nothing is claimed about runs past the bound.
std::vector<RunSpan> run_statistics(u64 bound);

struct MultiplicityRow {
    u64 n;
    u64 target;  // n(n+1)
    std::vector<twosq::TwoSquareRep> reps;
    u64 new_distinct;  // components not seen earlier in the range
};

struct MultiplicityReport {
    u64 n_lo = 0;
    u64 n_hi = 0;
    std::vector<MultiplicityRow> rows;  // only n with representations
    u64 representation_count = 0;
    u64 slot_count = 0;    // naive two components per representation
    u64 distinct_u = 0;    // distinct components over the whole range
    u64 admitted_u = 0;    // distinct components whose pairing passes t_max
};

// Representation bookkeeping for pronic targets n(n+1), n in [n_lo, n_hi]:
// how many distinct u the representations actually yield versus the naive
// two per representation.
MultiplicityReport multiplicity_report(u64 n_lo, u64 n_hi);

}  // namespace pronicsq::survey

#endif
