#include "cclab/rotation.hpp"

#include <cmath>
#include <limits>

namespace cclab {

namespace {

std::int64_t checked_mul_add(std::int64_t r, std::int64_t a, std::int64_t b) {
    std::int64_t t = 0, s = 0;
    if (__builtin_mul_overflow(r, a, &t) || __builtin_add_overflow(t, b, &s))
        throw std::overflow_error("convergent exceeds 64-bit range");
    return s;
}

// Append quotient r to the convergent recurrence.
void push_convergent(RotationNumber& rho, std::int64_t r) {
    const auto m = rho.convergents.size();
    std::int64_t pm1 = 1, qm1 = 0;  // p_{-1}, q_{-1}
    if (m >= 2) {
        pm1 = rho.convergents[m - 2].first;
        qm1 = rho.convergents[m - 2].second;
    }
    const std::int64_t pm = rho.convergents[m - 1].first;
    const std::int64_t qm = rho.convergents[m - 1].second;
    rho.convergents.emplace_back(checked_mul_add(r, pm, pm1),
                                 checked_mul_add(r, qm, qm1));
}

}  // namespace

RotationNumber continued_fraction(double x, int depth) {
    if (!(x > 0.0 && x < 1.0))
        throw std::domain_error("continued_fraction: x must lie in (0,1)");
    if (depth < 1)
        throw std::domain_error("continued_fraction: depth must be >= 1");

    RotationNumber rho;
    rho.value = x;
    rho.convergents.emplace_back(0, 1);  // p_0/q_0 = 0/1

    double y = x;
    for (int i = 0; i < depth; ++i) {
        const double inv = 1.0 / y;
        if (!(inv < static_cast<double>(kQuotientGuard))) {
            rho.numerically_rational = true;
            break;
        }
        const auto r = static_cast<std::int64_t>(std::floor(inv));
        rho.quotients.push_back(r);
        push_convergent(rho, r);
        y = inv - static_cast<double>(r);
        if (y <= 0.0) {  // exact division: rational input
            rho.numerically_rational = true;
            break;
        }
    }
    return rho;
}

RotationNumber continued_fraction_rational(std::int64_t num, std::int64_t den,
                                           int max_depth) {
    if (den <= 0 || num <= 0 || num >= den)
        throw std::domain_error("continued_fraction_rational: need 0 < num/den < 1");
    RotationNumber rho;
    rho.value = static_cast<double>(num) / static_cast<double>(den);
    rho.convergents.emplace_back(0, 1);
    // Euclid on (den, num): quotients of num/den.
    std::int64_t a = den, b = num;
    for (int i = 0; i < max_depth && b > 0; ++i) {
        const std::int64_t r = a / b;
        rho.quotients.push_back(r);
        push_convergent(rho, r);
        const std::int64_t rem = a % b;
        a = b;
        b = rem;
    }
    rho.numerically_rational = true;
    return rho;
}

RotationNumber from_quotients(const std::vector<std::int64_t>& quotients) {
    if (quotients.empty())
        throw std::domain_error("from_quotients: empty quotient list");
    RotationNumber rho;
    rho.convergents.emplace_back(0, 1);
    for (std::int64_t r : quotients) {
        if (r < 1) throw std::domain_error("from_quotients: quotients must be >= 1");
        rho.quotients.push_back(r);
        push_convergent(rho, r);
    }
    const auto& [p, q] = rho.convergents.back();
    rho.value = static_cast<double>(p) / static_cast<double>(q);
    return rho;
}

RotationNumber gauss_map(const RotationNumber& rho) {
    if (rho.quotients.size() < 2)
        throw std::domain_error("gauss_map: fewer than two quotients stored");
    RotationNumber out;
    out.quotients.assign(rho.quotients.begin() + 1, rho.quotients.end());
    out.convergents.emplace_back(0, 1);
    for (std::int64_t r : out.quotients) push_convergent(out, r);
    out.value = 1.0 / rho.value - static_cast<double>(rho.quotients.front());
    out.numerically_rational = rho.numerically_rational;
    return out;
}

bool is_bounded_type(const RotationNumber& rho, std::int64_t bound) {
    if (rho.quotients.empty())
        throw std::domain_error("is_bounded_type: no quotients stored");
    for (std::int64_t r : rho.quotients)
        if (r > bound) return false;
    return true;
}

double periodic_value(const std::vector<std::int64_t>& period) {
    if (period.empty()) throw std::domain_error("periodic_value: empty period");
    // Iterate the evaluation to a fixed point; convergence is geometric.
    double x = 0.5;
    for (int iter = 0; iter < 200; ++iter) {
        double t = x;
        for (auto it = period.rbegin(); it != period.rend(); ++it)
            t = 1.0 / (static_cast<double>(*it) + t);
        if (std::abs(t - x) < 1e-17) return t;
        x = t;
    }
    return x;
}

double golden_mean() { return (std::sqrt(5.0) - 1.0) / 2.0; }

}  // namespace cclab
