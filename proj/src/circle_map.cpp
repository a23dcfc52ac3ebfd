#include "cclab/circle_map.hpp"

#include <cmath>
#include <limits>
#include <numbers>

namespace cclab {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kPi = std::numbers::pi;
}  // namespace

double circle_rep(double x) {
    double r = std::remainder(x, 1.0);
    if (r <= -0.5) r = 0.5;
    return r;
}

CriticalCircleMap CriticalCircleMap::standard(double theta) {
    return CriticalCircleMap(MapFamily::standard, theta);
}

CriticalCircleMap CriticalCircleMap::blaschke_circle(double tau) {
    return CriticalCircleMap(MapFamily::blaschke_circle, tau);
}

double CriticalCircleMap::strip_height() const {
    if (family_ == MapFamily::standard)
        return std::numeric_limits<double>::infinity();
    return std::log(3.0) / kTwoPi;  // ~0.1748
}

double CriticalCircleMap::lift(double x) const {
    if (family_ == MapFamily::standard)
        return x + param_ - std::sin(kTwoPi * x) / kTwoPi;
    // arg(3 - e^{2 pi i x}) stays in the right half-plane: principal branch.
    const double s = std::sin(kTwoPi * x), c = std::cos(kTwoPi * x);
    return param_ + x + std::atan2(-s, 3.0 - c) / kPi;
}

cplx CriticalCircleMap::lift(cplx z) const {
    if (family_ == MapFamily::standard)
        return z + param_ - std::sin(kTwoPi * z) / kTwoPi;
    if (std::abs(z.imag()) > 0.999 * strip_height())
        throw std::domain_error("blaschke lift: point outside analyticity strip");
    const cplx w = std::exp(cplx(0.0, kTwoPi) * z);
    const cplx v = std::exp(cplx(0.0, -kTwoPi) * z);
    // tau + z + (log(3-w) - log(1-v/3) - log 3) / (2 pi i)
    const cplx num = std::log(3.0 - w) - std::log(1.0 - v / 3.0) - std::log(3.0);
    return param_ + z + num / cplx(0.0, kTwoPi);
}

cplx CriticalCircleMap::lift_derivative(cplx z) const {
    if (family_ == MapFamily::standard)
        return 1.0 - std::cos(kTwoPi * z);
    if (std::abs(z.imag()) > 0.999 * strip_height())
        throw std::domain_error("blaschke lift: point outside analyticity strip");
    const cplx w = std::exp(cplx(0.0, kTwoPi) * z);
    const cplx v = std::exp(cplx(0.0, -kTwoPi) * z);
    return 1.0 - w / (3.0 - w) - v / (3.0 - v);
}

std::pair<double, std::int64_t> CriticalCircleMap::circle_step(double y) const {
    const double v = lift(y);
    auto k = static_cast<std::int64_t>(std::floor(v));
    double yn = v - static_cast<double>(k);
    if (yn >= 1.0) { yn -= 1.0; ++k; }
    if (yn < 0.0) { yn += 1.0; --k; }
    return {yn, k};
}

double CriticalCircleMap::circle_preimage(double t) const {
    // F maps [-1/2, 1/2) onto [F(-1/2), F(-1/2)+1) homeomorphically.
    double lo = -0.5, hi = 0.5;
    const double base = lift(lo);
    double tl = t + std::ceil(base - t);
    if (tl < base) tl += 1.0;
    if (tl >= base + 1.0) tl -= 1.0;
    for (int it = 0; it < 100 && hi - lo > 1e-17; ++it) {
        const double mid = 0.5 * (lo + hi);
        (lift(mid) < tl ? lo : hi) = mid;
    }
    return circle_rep(0.5 * (lo + hi));
}

namespace {

ReturnChain critical_chain(const CriticalCircleMap& f, std::int64_t budget,
                           int max_levels, double min_rep, std::int64_t q_stop) {
    auto advance = [&f](double y) { return f.circle_step(y); };
    return closest_return_chain(advance, 1.0, budget, max_levels, min_rep,
                                q_stop);
}

}  // namespace

RotationEstimate rotation_estimate(const CriticalCircleMap& f,
                                   std::int64_t budget, double tol) {
    RotationEstimate est;
    const auto q_stop =
        static_cast<std::int64_t>(std::ceil(1.0 / std::sqrt(tol))) + 1;
    try {
        const ReturnChain chain = critical_chain(f, budget, 0, 0.0, q_stop);
        if (chain.records.size() < 2)
            throw std::runtime_error(
                "rotation_estimate: insufficient budget, no closest return "
                "beyond the first");
        const auto& deepest = chain.records.back();
        est.p = deepest.winding;
        est.q = deepest.time;
    } catch (const RationalLockError& lock) {
        // Lock at the first return of a parameter with rational rotation
        // number: the locked convergent is the exact value.
        est.rational_lock = true;
        if (lock.time == 1) {
            est.p = std::llround(f.lift(0.0));
            est.q = 1;
        } else {
            const ReturnChain chain =
                critical_chain(f, lock.time - 1, 0, 0.0, 0);
            if (chain.records.empty()) {
                est.p = std::llround(f.lift(0.0));
                est.q = 1;
            } else {
                // lock time itself is the rational period
                double y = 0.0;
                std::int64_t w = 0;
                for (std::int64_t i = 0; i < lock.time; ++i) {
                    auto [yn, k] = f.circle_step(y);
                    y = yn;
                    w += k;
                }
                est.p = w + std::llround(y - circle_rep(y));
                est.q = lock.time;
            }
        }
    }
    est.value = static_cast<double>(est.p) / static_cast<double>(est.q);
    est.error_bound = 1.0 / (static_cast<double>(est.q) * static_cast<double>(est.q));
    return est;
}

double rotation_number(const CriticalCircleMap& f, std::int64_t budget,
                       double tol) {
    return rotation_estimate(f, budget, tol).value;
}

CriticalOrbit closest_returns(const CriticalCircleMap& f, int max_level,
                              double min_interval) {
    // Budget grows with the requested depth; returns are geometric in m.
    const std::int64_t budget = 200'000'000;
    const ReturnChain chain =
        critical_chain(f, budget, max_level, min_interval, 0);
    CriticalOrbit orbit{f, {}, {}, {}};
    for (const auto& rec : chain.records) {
        orbit.times.push_back(rec.time);
        orbit.windings.push_back(rec.winding);
        orbit.points.push_back(rec.rep);
    }
    return orbit;
}

std::vector<double> critical_orbit_lift(const CriticalCircleMap& f,
                                        std::int64_t count) {
    std::vector<double> u;
    u.reserve(static_cast<std::size_t>(count) + 1);
    u.push_back(0.0);
    double y = 0.0;
    std::int64_t w = 0;
    for (std::int64_t j = 0; j < count; ++j) {
        auto [yn, k] = f.circle_step(y);
        y = yn;
        w += k;
        u.push_back(static_cast<double>(w) + y);
    }
    return u;
}

std::vector<double> backward_critical_orbit(const CriticalCircleMap& f,
                                            int count) {
    std::vector<double> b;
    b.reserve(static_cast<std::size_t>(count) + 1);
    b.push_back(0.0);
    double t = 0.0;
    for (int j = 0; j < count; ++j) {
        t = f.circle_preimage(t);
        b.push_back(t);
    }
    return b;
}

namespace {

// One guarded Newton run. Returns quiet NaN on failure.
cplx newton_attempt(const CriticalCircleMap& f, cplx target, cplx seed,
                    double tol, int max_iter) {
    cplx w = seed;
    const double wander_guard = 0.8;
    for (int it = 0; it < max_iter; ++it) {
        const cplx r = f.lift(w) - target;
        cplx d = f.lift_derivative(w);
        if (std::abs(d) < 1e-14) {
            // sitting on the cubic point: nudge off it
            w += cplx(1e-9, 1e-9);
            continue;
        }
        const cplx full_step = r / d;
        if (std::abs(r) < tol && std::abs(full_step) < std::max(tol, 1e-14))
            return w;
        cplx step = full_step;
        // never step past the nearest critical point (integers on the line)
        const double crit_dist =
            std::abs(w - cplx(std::round(w.real()), 0.0));
        const double cap = 0.45 * std::max(crit_dist, 1e-12);
        if (std::abs(step) > cap) step *= cap / std::abs(step);
        w -= step;
        if (std::abs(w - seed) > wander_guard) return cplx(NAN, NAN);
    }
    return cplx(NAN, NAN);
}

}  // namespace

cplx inverse_branch(const CriticalCircleMap& f, cplx target, cplx seed,
                    double tol) {
    // Homotopy from the seed's image to the target; adaptive subdivision
    // keeps each Newton run on the branch.
    const cplx t0 = f.lift(seed);
    cplx cur = seed;
    double done = 0.0, trial = 1.0;
    const double min_span = 1.0 / 4096.0;
    while (done < 1.0) {
        const cplx t = t0 + trial * (target - t0);
        const int iters = trial >= 1.0 ? 60 : 30;
        const cplx w = newton_attempt(f, t, cur, tol, iters);
        if (std::isfinite(w.real())) {
            cur = w;
            done = trial;
            trial = std::min(1.0, done + 2.0 * std::max(trial - done, min_span));
        } else {
            const double span = trial - done;
            if (span < min_span)
                throw BranchAmbiguityError(
                    "inverse_branch: Newton stalled or jumped branches");
            trial = done + 0.5 * span;
        }
    }
    if (std::abs(f.lift(cur) - target) >= tol)
        throw BranchAmbiguityError("inverse_branch: no convergence to target");
    return cur;
}

double solve_parameter(MapFamily family, double target, double tol,
                       std::int64_t budget) {
    if (!(target > 0.0 && target < 1.0))
        throw std::domain_error("solve_parameter: target must lie in (0,1)");
    auto make = [family](double p) {
        return family == MapFamily::standard
                   ? CriticalCircleMap::standard(p)
                   : CriticalCircleMap::blaschke_circle(p);
    };
    auto rho_of = [&](double p) -> double {
        try {
            return rotation_estimate(make(p), budget, 0.25 * tol).value;
        } catch (const std::exception&) {
            // plateau or shallow chain: a Birkhoff average still orders the
            // bisection correctly
            const auto f = make(p);
            double y = 0.0;
            std::int64_t w = 0;
            const int n = 20000;
            for (int i = 0; i < n; ++i) {
                auto [yn, k] = f.circle_step(y);
                y = yn;
                w += k;
            }
            return (static_cast<double>(w) + y) / n;
        }
    };
    double lo = 0.0, hi = 1.0;
    for (int it = 0; it < 100 && hi - lo > 1e-15; ++it) {
        const double mid = 0.5 * (lo + hi);
        const double r = rho_of(mid);
        if (r < target)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

}  // namespace cclab
