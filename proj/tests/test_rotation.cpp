#include <cmath>
#include <random>

#include "cclab/rotation.hpp"
#include "doctest.h"

using namespace cclab;

namespace {

// Independent oracle: exact continued fraction of a rational via Euclid's
// algorithm, kept apart from the library's expansion path.
std::vector<std::int64_t> euclid_cf(std::int64_t num, std::int64_t den,
                                    int depth) {
    std::vector<std::int64_t> out;
    std::int64_t a = den, b = num;
    while (b > 0 && static_cast<int>(out.size()) < depth) {
        out.push_back(a / b);
        const std::int64_t r = a % b;
        a = b;
        b = r;
    }
    return out;
}

}  // namespace

TEST_CASE("golden mean expands to all ones with Fibonacci denominators") {
    const auto rho = continued_fraction(golden_mean(), 8);
    REQUIRE(rho.quotients.size() == 8);
    for (auto r : rho.quotients) CHECK(r == 1);
    // q_1..q_8
    const std::int64_t fib[] = {1, 2, 3, 5, 8, 13, 21, 34};
    for (int m = 1; m <= 8; ++m) CHECK(rho.q(m) == fib[m - 1]);
    CHECK_FALSE(rho.numerically_rational);
}

TEST_CASE("x = 1/(2+golden) expands to [2,1,1,1,1]") {
    const double x = 1.0 / (2.0 + golden_mean());
    const auto rho = continued_fraction(x, 5);
    REQUIRE(rho.quotients.size() == 5);
    CHECK(rho.quotients[0] == 2);
    for (int i = 1; i < 5; ++i) CHECK(rho.quotients[i] == 1);
}

TEST_CASE("pi - 3 expands to [7,15,1,292]") {
    // oracle: integer long division on a high-precision value of pi
    const std::int64_t num = 141592653589793238;  // (pi-3) * 1e18
    const std::int64_t den = 1'000'000'000'000'000'000;
    const auto oracle = euclid_cf(num, den, 4);
    REQUIRE(oracle == std::vector<std::int64_t>{7, 15, 1, 292});

    const double x = 4.0 * std::atan(1.0) - 3.0;
    const auto rho = continued_fraction(x, 4);
    REQUIRE(rho.quotients.size() == 4);
    CHECK(rho.quotients == oracle);
}

TEST_CASE("convergent recurrence and approximation invariants") {
    const double x = 4.0 * std::atan(1.0) - 3.0;
    const auto rho = continued_fraction(x, 6);
    for (std::size_t m = 1; m + 1 < rho.convergents.size(); ++m) {
        CHECK(rho.q(m + 1) == rho.quotients[m] * rho.q(m) + rho.q(m - 1));
        CHECK(rho.p(m + 1) == rho.quotients[m] * rho.p(m) + rho.p(m - 1));
        const double approx =
            static_cast<double>(rho.p(m)) / static_cast<double>(rho.q(m));
        CHECK(std::abs(x - approx) <
              1.0 / (static_cast<double>(rho.q(m)) *
                     static_cast<double>(rho.q(m + 1))));
    }
}

TEST_CASE("round trip: quotients evaluate back to p_d/q_d exactly") {
    const auto rho = continued_fraction(golden_mean(), 10);
    // evaluate [r_0..r_{d-1}] bottom-up in exact integer arithmetic
    std::int64_t num = 0, den = 1;  // empty tail = 0
    for (auto it = rho.quotients.rbegin(); it != rho.quotients.rend(); ++it) {
        // 1/(r + num/den) = den/(r*den + num)
        const std::int64_t nden = *it * den + num;
        num = den;
        den = nden;
    }
    CHECK(num == rho.p(static_cast<int>(rho.depth())));
    CHECK(den == rho.q(static_cast<int>(rho.depth())));
}

TEST_CASE("gauss_map shifts quotients and maps the value analytically") {
    const auto rho = continued_fraction(1.0 / (2.0 + golden_mean()), 5);
    const auto g = gauss_map(rho);
    CHECK(g.quotients == std::vector<std::int64_t>{1, 1, 1, 1});
    CHECK(g.value == doctest::Approx(golden_mean()).epsilon(1e-12));

    const auto golden = continued_fraction(golden_mean(), 8);
    const auto gg = gauss_map(golden);
    for (auto r : gg.quotients) CHECK(r == 1);
    CHECK(gg.value == doctest::Approx(golden_mean()).epsilon(1e-12));

    const auto pi3 = continued_fraction(4.0 * std::atan(1.0) - 3.0, 4);
    const auto gpi = gauss_map(pi3);
    CHECK(gpi.quotients == std::vector<std::int64_t>{15, 1, 292});
}

TEST_CASE("gauss_map commutes with the analytic Gauss map") {
    std::mt19937_64 rng(42);
    for (int trial = 0; trial < 50; ++trial) {
        const double x =
            0.05 + 0.9 * static_cast<double>(rng() >> 11) * 0x1.0p-53;
        const auto rho = continued_fraction(x, 12);
        if (rho.numerically_rational || rho.quotients.size() < 2) continue;
        const double gx = 1.0 / x - std::floor(1.0 / x);
        if (gx < 1e-3 || gx > 1.0 - 1e-3) continue;  // near small denominators
        CHECK(gauss_map(rho).value == doctest::Approx(gx).epsilon(1e-10));
    }
}

TEST_CASE("is_bounded_type inspects the stored truncation") {
    CHECK(is_bounded_type(continued_fraction(golden_mean(), 8), 1));
    CHECK_FALSE(is_bounded_type(
        continued_fraction(1.0 / (2.0 + golden_mean()), 5), 1));
    CHECK_FALSE(is_bounded_type(
        continued_fraction(4.0 * std::atan(1.0) - 3.0, 4), 100));
}

TEST_CASE("domain and depth errors") {
    CHECK_THROWS_AS(continued_fraction(1.5, 4), std::domain_error);
    CHECK_THROWS_AS(continued_fraction(0.0, 4), std::domain_error);
    CHECK_THROWS_AS(continued_fraction(0.5, 0), std::domain_error);
    CHECK_THROWS_AS(gauss_map(continued_fraction(0.5, 8)), std::domain_error);
}

TEST_CASE("rational and near-rational inputs flag numerically_rational") {
    const auto half = continued_fraction(0.5, 8);
    CHECK(half.numerically_rational);
    CHECK(half.quotients == std::vector<std::int64_t>{2});

    // quotient beyond the overflow guard terminates the expansion
    const auto tiny = continued_fraction(1e-9, 8);
    CHECK(tiny.numerically_rational);
    CHECK(tiny.quotients.empty());
}

TEST_CASE("periodic_value reproduces quadratic irrationals") {
    CHECK(periodic_value({1}) == doctest::Approx(golden_mean()).epsilon(1e-15));
    // [1,2,1,2,...] solves x^2 + 2x - 2 = 0
    CHECK(periodic_value({1, 2}) ==
          doctest::Approx(std::sqrt(3.0) - 1.0).epsilon(1e-15));
}

TEST_CASE("exact rational expansion matches the double path") {
    const auto r = continued_fraction_rational(2, 3, 16);
    CHECK(r.quotients == std::vector<std::int64_t>{1, 2});
    const auto fq = from_quotients({1, 2});
    CHECK(fq.p(2) == 2);
    CHECK(fq.q(2) == 3);
}
