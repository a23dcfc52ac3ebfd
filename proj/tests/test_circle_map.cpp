#include <cmath>
#include <complex>

#include "cclab/circle_map.hpp"
#include "cclab/rotation.hpp"
#include "doctest.h"

using namespace cclab;

namespace {

// Bisection oracle for the golden-rho parameter of the standard family;
// memoized because several suites need it.
double golden_theta() {
    static const double theta =
        solve_parameter(MapFamily::standard, golden_mean(), 1e-9);
    return theta;
}

}  // namespace

TEST_CASE("standard lift basics") {
    const auto f0 = CriticalCircleMap::standard(0.0);
    CHECK(f0.lift(0.0) == 0.0);
    const auto fh = CriticalCircleMap::standard(0.5);
    CHECK(fh.lift(0.0) == doctest::Approx(0.5).epsilon(1e-15));

    // F(x+1) - F(x) - 1 = 0 on a sample grid
    for (int i = 0; i <= 40; ++i) {
        const double x = -1.0 + 2.0 * i / 40.0;
        CHECK(std::abs(fh.lift(x + 1.0) - fh.lift(x) - 1.0) < 1e-12);
    }
    // nondecreasing on [0,1]
    double prev = fh.lift(0.0);
    for (int i = 1; i <= 200; ++i) {
        const double v = fh.lift(i / 200.0);
        CHECK(v >= prev - 1e-15);
        prev = v;
    }
}

TEST_CASE("cubic critical point at 0 for both families") {
    for (const auto& f : {CriticalCircleMap::standard(0.4),
                          CriticalCircleMap::blaschke_circle(0.37)}) {
        const double h = 1e-5;
        const cplx d1 = f.lift_derivative(cplx(0.0, 0.0));
        CHECK(std::abs(d1) < 1e-12);
        const double d2 =
            (f.lift(h) - 2.0 * f.lift(0.0) + f.lift(-h)) / (h * h);
        CHECK(std::abs(d2) < 1e-5);
        const double d3 =
            (f.lift(2 * h) - 2 * f.lift(h) + 2 * f.lift(-h) - f.lift(-2 * h)) /
            (2 * h * h * h);
        CHECK(std::abs(d3) > 0.1);
    }
}

TEST_CASE("blaschke lift agrees with its complex extension on the line") {
    const auto f = CriticalCircleMap::blaschke_circle(0.4321);
    for (int i = 0; i < 17; ++i) {
        const double x = -0.7 + 1.5 * i / 17.0;
        const cplx w = f.lift(cplx(x, 0.0));
        CHECK(std::abs(w.imag()) < 1e-13);
        CHECK(w.real() == doctest::Approx(f.lift(x)).epsilon(1e-12));
    }
    // complex derivative matches finite differences inside the strip
    const cplx z(0.23, 0.05);
    const cplx h(1e-6, 0.0);
    const cplx fd = (f.lift(z + h) - f.lift(z - h)) / (2.0 * h);
    CHECK(std::abs(fd - f.lift_derivative(z)) < 1e-7);
    CHECK_THROWS_AS(f.lift(cplx(0.0, 0.3)), std::domain_error);
}

TEST_CASE("rotation number: fixed point and the golden parameter") {
    CHECK(rotation_number(CriticalCircleMap::standard(0.0), 10000, 1e-6) ==
          0.0);
    const auto f = CriticalCircleMap::standard(golden_theta());
    CHECK(rotation_number(f, 4'000'000, 1e-9) ==
          doctest::Approx(golden_mean()).epsilon(1e-8));
}

TEST_CASE("closest returns of the golden map are Fibonacci") {
    const auto f = CriticalCircleMap::standard(golden_theta());
    const auto orbit = closest_returns(f, 10);
    REQUIRE(orbit.levels() == 10);
    const std::int64_t fib[] = {1, 2, 3, 5, 8, 13, 21, 34, 55, 89};
    for (int m = 1; m <= 10; ++m) CHECK(orbit.q(m) == fib[m - 1]);
}

TEST_CASE("closest returns for rho = [2,1,1,...]") {
    const double target = 1.0 / (2.0 + golden_mean());
    const double theta = solve_parameter(MapFamily::standard, target, 1e-9);
    const auto orbit = closest_returns(CriticalCircleMap::standard(theta), 8);
    REQUIRE(orbit.levels() >= 5);
    CHECK(orbit.q(1) == 2);
    CHECK(orbit.q(2) == 3);
    CHECK(orbit.q(3) == 5);
    CHECK(orbit.q(4) == 8);
    CHECK(orbit.q(5) == 13);
}

TEST_CASE("orbit combinatorics: recurrence, alternation, shrinking") {
    const auto f = CriticalCircleMap::standard(golden_theta());
    const auto orbit = closest_returns(f, 12);
    const auto rho = continued_fraction(
        rotation_number(f, 4'000'000, 1e-10), orbit.levels());

    // q_{m+1} = r_m q_m + q_{m-1} exactly, against the rotation number
    for (int m = 1; m < orbit.levels(); ++m) {
        CHECK(orbit.q(m) == rho.q(m));
        CHECK(orbit.p(m) == rho.p(m));
    }
    for (int m = 1; m + 1 <= orbit.levels(); ++m) {
        CHECK(orbit.a(m) * orbit.a(m + 1) < 0.0);  // sign alternation
        CHECK(orbit.interval_length(m + 1) < orbit.interval_length(m));
    }
}

TEST_CASE("real bounds band: interval ratios stay in a stable band") {
    const auto f = CriticalCircleMap::standard(golden_theta());
    const auto orbit = closest_returns(f, 11);
    for (int m = 4; m <= 10; ++m) {
        const double ratio =
            orbit.interval_length(m) / orbit.interval_length(m + 1);
        CHECK(ratio > 1.5);
        CHECK(ratio < 25.0);
    }
}

TEST_CASE("rational lock is detected") {
    CHECK_THROWS_AS(closest_returns(CriticalCircleMap::standard(0.0), 5),
                    RationalLockError);
}

TEST_CASE("blaschke circle restriction carries a rotation number") {
    const double tau =
        solve_parameter(MapFamily::blaschke_circle, golden_mean(), 1e-9);
    const auto f = CriticalCircleMap::blaschke_circle(tau);
    CHECK(rotation_number(f, 4'000'000, 1e-9) ==
          doctest::Approx(golden_mean()).epsilon(1e-8));
    const auto orbit = closest_returns(f, 8);
    CHECK(orbit.q(8) == 34);  // Fibonacci
}

TEST_CASE("inverse_branch: real preimage away from the critical point") {
    const auto f = CriticalCircleMap::standard(0.6);
    const double x0 = 0.31;
    const cplx w = inverse_branch(f, f.lift(x0), cplx(x0 + 0.01, 0.0), 1e-12);
    CHECK(std::abs(w - cplx(x0, 0.0)) < 1e-10);
}

TEST_CASE("inverse_branch: critical value with cubic flattening") {
    const auto f = CriticalCircleMap::standard(0.6);
    const cplx w = inverse_branch(f, f.lift(0.0), cplx(0.05, 0.0), 1e-9);
    CHECK(std::abs(w) < 1e-8);
}

TEST_CASE("inverse_branch: complex pullback verified by forward evaluation") {
    const auto f = CriticalCircleMap::standard(golden_theta());
    const auto orbit = closest_returns(f, 5);
    const double mid = 0.5 * orbit.a(4);
    const cplx target(mid, 0.1 * std::abs(orbit.a(4)));
    const cplx seed(orbit.map.circle_preimage(mid), 0.0);
    const cplx w = inverse_branch(f, target, seed, 1e-11);
    CHECK(std::abs(f.lift(w) - target) < 1e-11);
    CHECK(std::isfinite(w.real()));
}

TEST_CASE("backward critical orbit inverts the forward dynamics") {
    const auto f = CriticalCircleMap::standard(golden_theta());
    const auto b = backward_critical_orbit(f, 12);
    for (int j = 1; j <= 12; ++j) {
        const double fwd = circle_rep(f.lift(b[j]));
        CHECK(std::abs(fwd - b[j - 1]) < 1e-12);
    }
}

TEST_CASE("critical orbit lift matches the reduced orbit") {
    const auto f = CriticalCircleMap::standard(golden_theta());
    const auto u = critical_orbit_lift(f, 30);
    REQUIRE(u.size() == 31);
    double x = 0.0;
    for (int j = 1; j <= 30; ++j) {
        x = f.lift(x);
        CHECK(u[j] == doctest::Approx(x).epsilon(1e-12));
    }
}
