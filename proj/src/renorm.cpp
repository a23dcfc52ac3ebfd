#include "cclab/renorm.hpp"

#include <cmath>
#include <stdexcept>

namespace cclab {

namespace {

std::int64_t mul_add(std::int64_t r, std::int64_t a, std::int64_t b) {
    std::int64_t t = 0, s = 0;
    if (__builtin_mul_overflow(r, a, &t) || __builtin_add_overflow(t, b, &s))
        throw std::overflow_error("iterate record exceeds 64-bit range");
    return s;
}

}  // namespace

CommutingPair pair_from_map(const CriticalOrbit& orbit, int m) {
    if (m < 1 || m + 1 > orbit.levels())
        throw std::domain_error(
            "pair_from_map: level too deep for the computed orbit");
    const IterateRecord eta{orbit.q(m + 1), orbit.p(m + 1)};
    const IterateRecord xi{orbit.q(m), orbit.p(m)};
    // signed scale: xi(0) = scale * a_m = 1 in the chart
    return CommutingPair(orbit.map, eta, xi, 1.0 / orbit.a(m));
}

CommutingPair pair_from_map(const CriticalCircleMap& f, int m) {
    return pair_from_map(closest_returns(f, m + 1), m);
}

CommutingPair renormalize(const CommutingPair& pair) {
    // r = number of eta-steps the orbit of xi(0) takes before changing sides
    double w = pair.xi0();
    std::int64_t r = 0;
    for (;;) {
        const double wn = pair.eta(w);
        if (!(std::abs(wn) < 4.0))
            throw std::runtime_error("renormalize: iterate left the domain");
        if (wn <= 0.0) break;
        w = wn;
        if (++r > 1'000'000)
            throw std::runtime_error("renormalize: quotient overflow");
    }
    if (r < 1)
        throw std::runtime_error(
            "renormalize: xi(0) leaves I_eta immediately (invalid pair)");

    const IterateRecord& e = pair.eta_record();
    const IterateRecord& x = pair.xi_record();
    const IterateRecord eta_new{mul_add(r, e.iterates, x.iterates),
                                mul_add(r, e.translation, x.translation)};
    const IterateRecord xi_new = e;

    // new xi(0) in raw coordinates fixes the next chart scale
    double raw = 0.0;
    for (std::int64_t i = 0; i < eta_new.iterates; ++i)
        raw = pair.base().lift(raw);
    raw -= static_cast<double>(eta_new.translation);
    if (raw == 0.0)
        throw std::runtime_error("renormalize: degenerate rescaling");
    return CommutingPair(pair.base(), eta_new, xi_new, 1.0 / raw);
}

RotationNumber rotation_number_of_pair(const CommutingPair& pair,
                                       std::int64_t budget,
                                       std::int64_t max_q) {
    // glue I_eta = [0,1] with 0 ~ 1 = xi(0); the glued map is
    //   xi o eta on [0, eta^{-1}(0)], eta on [eta^{-1}(0), 1].
    const double L = pair.xi0();
    if (!(L > 0.0))
        throw std::domain_error("rotation_number_of_pair: pair not normalized");

    // eta^{-1}(0) by bisection: eta(0) < 0 and eta(L) = xi(eta(0)) ... > 0
    double lo = 0.0, hi = L;
    if (!(pair.eta(lo) < 0.0 && pair.eta(hi) > 0.0))
        throw std::domain_error(
            "rotation_number_of_pair: eta has no zero inside I_eta");
    for (int it = 0; it < 80; ++it) {
        const double mid = 0.5 * (lo + hi);
        (pair.eta(mid) < 0.0 ? lo : hi) = mid;
    }
    const double cut = 0.5 * (lo + hi);

    auto advance = [&pair, cut, L](double y) -> std::pair<double, std::int64_t> {
        const double v = y <= cut ? pair.xi(pair.eta(y)) : pair.eta(y) + L;
        auto k = static_cast<std::int64_t>(std::floor(v / L));
        double yn = v - static_cast<double>(k) * L;
        if (yn >= L) { yn -= L; ++k; }
        if (yn < 0.0) { yn += L; --k; }
        return {yn, k};
    };

    const ReturnChain chain =
        closest_return_chain(advance, L, budget, 0, 0.0, max_q);
    if (chain.records.size() < 2)
        throw std::runtime_error(
            "rotation_number_of_pair: insufficient budget");
    const auto& deepest = chain.records.back();
    // orientation convention: the pair's number is 1 - rho_+(f_zeta)
    return continued_fraction_rational(deepest.time - deepest.winding,
                                       deepest.time);
}

double commutation_residual(const CommutingPair& pair, int n_samples) {
    const double a = pair.eta0(), b = pair.xi0();
    double worst = 0.0;
    for (int i = 0; i < n_samples; ++i) {
        const double x = a + (b - a) * (i + 0.5) / n_samples;
        worst = std::max(worst,
                         std::abs(pair.eta(pair.xi(x)) - pair.xi(pair.eta(x))));
    }
    return worst;
}

namespace {

// Maximal monotone extension of the diffeomorphic factor of one half-map.
// The half is F^n - P on the raw interval I (adjacent to 0); the cubic
// factor is the first application of F, the diffeo part is F^{n-1} on F(I).
// Returns the certified witness pair (J, J_tilde) at the image level.
EpsteinDescriptor epstein_half(const CriticalCircleMap& f, IterateRecord rec,
                               double raw_lo, double raw_hi) {
    const auto n = rec.iterates;
    const double P = static_cast<double>(rec.translation);

    // forward orbit of the interval midpoint, absolute lift values
    std::vector<double> o(static_cast<std::size_t>(n) + 1);
    o[0] = 0.5 * (raw_lo + raw_hi);
    for (std::int64_t j = 0; j < n; ++j) o[j + 1] = f.lift(o[j]);

    // image interval J
    double e1 = raw_lo, e2 = raw_hi;
    for (std::int64_t j = 0; j < n; ++j) {
        e1 = f.lift(e1);
        e2 = f.lift(e2);
    }
    Interval J{e1 - P, e2 - P};

    // solve F(x) = target inside the monotone component (clo, chi)
    auto pullback = [&f](double target, double clo, double chi) {
        if (f.lift(clo) >= target) return clo;
        if (f.lift(chi) <= target) return chi;
        for (int it = 0; it < 90; ++it) {
            const double mid = 0.5 * (clo + chi);
            (f.lift(mid) < target ? clo : chi) = mid;
        }
        return 0.5 * (clo + chi);
    };

    // backward recursion of monotonicity constraints down to level 1
    double lo = -std::numeric_limits<double>::infinity();
    double hi = std::numeric_limits<double>::infinity();
    for (std::int64_t lev = n - 1; lev >= 1; --lev) {
        const double x = o[lev];
        const double clo = std::floor(x), chi = clo + 1.0;
        double nlo = clo, nhi = chi;
        if (std::isfinite(lo)) nlo = pullback(lo, clo, chi);
        if (std::isfinite(hi)) nhi = pullback(hi, clo, chi);
        lo = nlo;
        hi = nhi;
    }
    // cubic-factor constraint: level-1 interval inside F(component of I)
    const double side = (raw_lo + raw_hi) > 0.0 ? 1.0 : -1.0;
    lo = std::isfinite(lo) ? std::max(lo, f.lift(side < 0 ? -1.0 : 0.0)) : f.lift(side < 0 ? -1.0 : 0.0);
    hi = std::isfinite(hi) ? std::min(hi, f.lift(side < 0 ? 0.0 : 1.0)) : f.lift(side < 0 ? 0.0 : 1.0);

    // push the extension forward to the image level
    double tlo = lo, thi = hi;
    for (std::int64_t j = 1; j < n; ++j) {
        tlo = f.lift(tlo);
        thi = f.lift(thi);
    }
    Interval Jt{tlo - P, thi - P};

    EpsteinDescriptor desc = epstein_from_intervals(J, Jt);
    return desc;
}

}  // namespace

EpsteinDescriptor epstein_from_intervals(const Interval& J,
                                         const Interval& J_tilde) {
    EpsteinDescriptor d;
    d.J = J;
    d.J_tilde = J_tilde;
    const double left = J.lo() - J_tilde.lo();
    const double right = J_tilde.hi() - J.hi();
    d.s = std::max(0.0, std::min(left, right) / J.length());
    return d;
}

EpsteinDescriptor epstein_check(const CommutingPair& pair, int /*grid*/) {
    const double inv = 1.0 / pair.scale();
    // raw intervals: I_eta = [0, xi0_raw], I_xi = [eta0_raw, 0]
    const double xi0_raw = pair.xi0() * inv;
    const double eta0_raw = pair.eta0() * inv;
    const EpsteinDescriptor de = epstein_half(
        pair.base(), pair.eta_record(), std::min(0.0, xi0_raw),
        std::max(0.0, xi0_raw));
    const EpsteinDescriptor dx = epstein_half(
        pair.base(), pair.xi_record(), std::min(0.0, eta0_raw),
        std::max(0.0, eta0_raw));
    return de.s <= dx.s ? de : dx;
}

}  // namespace cclab
