#include "cclab/return_chain.hpp"

#include <cmath>

namespace cclab {

ReturnChain closest_return_chain(
    const std::function<std::pair<double, std::int64_t>(double)>& advance,
    double circumference, std::int64_t budget, int max_levels, double min_rep,
    std::int64_t q_stop, double lock_eps) {
    const double L = circumference;
    ReturnChain chain;

    double y = 0.0;
    std::int64_t winding = 0;
    double best = L;  // no return seen yet

    // Chain state: (qA,pA) = previous convergent, (qB,pB) = current.
    std::int64_t qA = 0, pA = 1, qB = 0, pB = 0;
    bool have_first = false;

    for (std::int64_t n = 1; n <= budget; ++n) {
        auto [ynext, w] = advance(y);
        y = ynext;
        winding += w;
        double r = y - L * std::round(y / L);
        if (r <= -0.5 * L) r += L;  // representative in (-L/2, L/2]
        const double d = std::abs(r);
        if (d < lock_eps * L) throw RationalLockError(n);
        if (d >= best) continue;
        best = d;
        // integer winding of the lift at this return
        const auto p =
            winding + static_cast<std::int64_t>(std::llround((y - r) / L));

        if (!have_first) {
            if (n != 1)
                throw CombinatoricsError("first distance record not at time 1");
            have_first = true;
            if (p == 0) {
                // time 1 is the 0/1 convergent; q_1 comes later
                qA = 0; pA = 1; qB = 1; pB = 0;
                continue;
            }
            // rho > 1/2: time 1 is q_1 = 1 with p_1 = 1 (and q_0 = 1)
            qA = 1; pA = 0; qB = 1; pB = 1;
            chain.quotients.push_back(1);
            chain.records.push_back({1, 1, r});
        } else {
            if (qB == 0 || (n - qA) % qB != 0)
                throw CombinatoricsError(
                    "closest-return time breaks the convergent recurrence");
            const std::int64_t rq = (n - qA) / qB;
            if (rq < 1 || p != rq * pB + pA)
                throw CombinatoricsError(
                    "closest-return winding breaks the convergent recurrence");
            chain.quotients.push_back(rq);
            chain.records.push_back({n, p, r});
            qA = qB; pA = pB; qB = n; pB = p;
        }

        chain.steps_used = n;
        if (max_levels > 0 &&
            static_cast<int>(chain.records.size()) >= max_levels)
            break;
        if (min_rep > 0.0 && d < min_rep) break;
        if (q_stop > 0 && n >= q_stop) break;
    }
    chain.steps_used = chain.steps_used == 0 ? budget : chain.steps_used;
    return chain;
}

}  // namespace cclab
