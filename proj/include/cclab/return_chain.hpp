// Closest-return detection for circle systems given as a step on a
// fundamental domain plus a wrap count. Shared by circle maps and glued
// commuting pairs.

#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <vector>

namespace cclab {

struct RationalLockError : std::runtime_error {
    std::int64_t time;
    explicit RationalLockError(std::int64_t t)
        : std::runtime_error("rational lock: orbit returned to the marked point"),
          time(t) {}
};

struct CombinatoricsError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ReturnRecord {
    std::int64_t time = 0;  // q_m
    std::int64_t winding = 0;  // p_m
    double rep = 0.0;  // signed circle representative of the return point
};

struct ReturnChain {
    // Validated closest returns q_1 < q_2 < ... with exact integer
    // recurrences q_{m+1} = r_m q_m + q_{m-1}, p alike.
    std::vector<ReturnRecord> records;
    std::vector<std::int64_t> quotients;  // r_0, r_1, ...
    std::int64_t steps_used = 0;
};

// advance: y in [0,L) -> (y', wraps crossed). Scans the orbit of y=0 for
// successive minima of |rep| and validates them against the convergent
// recurrence; stops after max_levels accepted returns, when |rep| drops
// below min_rep, or when q exceeds q_stop (0 = no limit for either).
ReturnChain closest_return_chain(
    const std::function<std::pair<double, std::int64_t>(double)>& advance,
    double circumference, std::int64_t budget, int max_levels, double min_rep,
    std::int64_t q_stop, double lock_eps = 1e-14);

}  // namespace cclab
