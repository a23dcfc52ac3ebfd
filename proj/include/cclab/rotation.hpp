// Continued fractions, convergents and the Gauss shift for rotation numbers.

#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace cclab {

// An irrational in (0,1) known through a truncated continued fraction
//   x = 1/(r0 + 1/(r1 + 1/(r2 + ...))),   all r_i >= 1.
//
// Convergents p_m/q_m are the truncations [r0,...,r_{m-1}] and obey
//   q_{m+1} = r_m q_m + q_{m-1},  q_0 = 1, q_{-1} = 0   (same for p with
//   p_0 = 0, p_{-1} = 1), kept in exact 64-bit integer arithmetic.
struct RotationNumber {
    double value = 0.0;
    std::vector<std::int64_t> quotients;
    // convergents[m] = (p_m, q_m) for m = 0..quotients.size()
    std::vector<std::pair<std::int64_t, std::int64_t>> convergents;
    // True when the expansion stopped early because a partial quotient
    // exceeded the overflow guard: the input is numerically rational.
    bool numerically_rational = false;

    std::int64_t p(std::size_t m) const { return convergents.at(m).first; }
    std::int64_t q(std::size_t m) const { return convergents.at(m).second; }
    std::size_t depth() const { return quotients.size(); }
};

// Partial quotients larger than this cannot be resolved from a double
// and terminate the expansion with numerically_rational set.
inline constexpr std::int64_t kQuotientGuard = 1'000'000;

// Expand x in (0,1) to at most `depth` partial quotients.
// Throws std::domain_error when x is outside (0,1).
RotationNumber continued_fraction(double x, int depth);

// Exact expansion of the rational num/den in (0,1) (Euclid's algorithm).
RotationNumber continued_fraction_rational(std::int64_t num, std::int64_t den,
                                           int max_depth = 64);

// Build a RotationNumber from explicit partial quotients; the value is the
// evaluated finite fraction (quotients stay exact).
RotationNumber from_quotients(const std::vector<std::int64_t>& quotients);

// Drop the leading quotient: [r0,r1,...] -> [r1,...].
// Throws std::domain_error when fewer than two quotients remain.
RotationNumber gauss_map(const RotationNumber& rho);

// True iff every stored quotient is <= bound. A statement about the stored
// truncation only.
bool is_bounded_type(const RotationNumber& rho, std::int64_t bound);

// Value of the periodic continued fraction [r0,...,rk,r0,...,rk,...].
double periodic_value(const std::vector<std::int64_t>& period);

// (sqrt(5)-1)/2 = [1,1,1,...]
double golden_mean();

}  // namespace cclab
