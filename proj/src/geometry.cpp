#include "cclab/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace cclab {

namespace {
constexpr double kPi = std::numbers::pi;
}

double interval_dist(cplx z, const Interval& J) {
    const double x = z.real(), y = z.imag();
    if (x >= J.lo() && x <= J.hi()) return std::abs(y);
    const double da = std::abs(z - cplx(J.lo(), 0.0));
    const double db = std::abs(z - cplx(J.hi(), 0.0));
    return std::min(da, db);
}

double angle_to_interval(cplx z, const Interval& J) {
    const cplx a(J.lo(), 0.0), b(J.hi(), 0.0);
    if (z == a || z == b)
        throw std::domain_error("angle_to_interval: undefined at an endpoint");
    const double alpha_a = std::abs(std::arg(a - z));  // vs the ray (a,-inf]
    const double alpha_b = std::abs(std::arg(z - b));  // vs the ray [b,+inf)
    return std::min(alpha_a, alpha_b);
}

namespace {

// Inscribed angle of the chord J seen from z, mirrored into the upper
// half-plane: in (0, pi) off the line, pi on the open interval, 0 on the
// closed rays.
double inscribed_angle(cplx z, const Interval& J) {
    const double lo = J.lo(), hi = J.hi();
    if (z.imag() == 0.0) {
        const double x = z.real();
        return (x > lo && x < hi) ? kPi : 0.0;
    }
    const cplx zz(z.real(), std::abs(z.imag()));
    return std::arg((zz - cplx(hi, 0.0)) / (zz - cplx(lo, 0.0)));
}

}  // namespace

double GeodesicNeighborhood::margin(cplx z) const {
    return (kPi - theta) - inscribed_angle(z, j);
}

std::vector<cplx> GeodesicNeighborhood::boundary_samples(int n) const {
    std::vector<cplx> out;
    out.reserve(static_cast<std::size_t>(n));
    const double h = 0.5 * j.length();
    const double m = 0.5 * (j.lo() + j.hi());
    const double R = h / std::sin(theta);
    const cplx C(m, -h / std::tan(theta));
    const int n_up = (n + 1) / 2;
    // upper arc runs from phi = pi/2 - theta (at hi) to pi/2 + theta (at lo)
    for (int k = 0; k < n_up; ++k) {
        const double t = std::cos(kPi * (k + 0.5) / n_up);
        const double phi = 0.5 * kPi + theta * t;
        out.push_back(C + R * std::polar(1.0, phi));
    }
    const int n_dn = n - n_up;
    for (int k = 0; k < n_dn; ++k) {
        const double t = std::cos(kPi * (k + 0.5) / n_dn);
        const double phi = 0.5 * kPi + theta * t;
        out.push_back(std::conj(C + R * std::polar(1.0, phi)));
    }
    return out;
}

SchwarzReport schwarz_sample_check(const ConformalBranch& branch,
                                   const Interval& J, const Interval& J2,
                                   double theta, int n) {
    const GeodesicNeighborhood src{J, theta};
    const GeodesicNeighborhood dst{J2, theta};
    SchwarzReport rep;
    rep.max_margin = -std::numeric_limits<double>::infinity();
    for (const cplx& z : src.boundary_samples(n)) {
        const cplx w = branch(z);
        rep.max_margin = std::max(rep.max_margin, dst.margin(w));
        ++rep.samples;
    }
    return rep;
}

cplx principal_cbrt(cplx z) {
    if (z == cplx(0.0, 0.0)) return z;
    return std::polar(std::cbrt(std::abs(z)), std::arg(z) / 3.0);
}

CubeRootHull cube_root_hull(double a, double theta, int n) {
    if (!(a > 0.0)) throw std::domain_error("cube_root_hull: need a > 0");
    const Interval T{-a, 1.0};
    const Interval Tp{0.0, 1.0};
    const GeodesicNeighborhood src{T, theta};

    std::vector<cplx> images;
    images.reserve(static_cast<std::size_t>(n));
    for (const cplx& z : src.boundary_samples(n)) images.push_back(principal_cbrt(z));

    CubeRootHull hull;
    // smallest theta' containing every image: theta' >= pi - inscribed angle
    double need = 0.0;
    for (const cplx& w : images)
        need = std::max(need, kPi - inscribed_angle(w, Tp));
    hull.theta_prime = std::min(need + 1e-12, kPi - 1e-12);

    // search a two-disc cover with sigma < pi/2
    const double slack = std::min(1.02 * hull.theta_prime, kPi - 1e-9);
    for (double sigma = kPi / 3.0 + 0.02; sigma < kPi / 2.0 - 0.01 && !hull.cover_found;
         sigma += 0.03) {
        for (double b = 0.05; b <= 0.60 && !hull.cover_found; b += 0.05) {
            for (double c = b + 0.10; c <= 0.95; c += 0.05) {
                const GeodesicNeighborhood right{{b, 1.0}, slack};
                const GeodesicNeighborhood left{{0.0, c}, sigma};
                bool ok = true;
                for (const cplx& w : images) {
                    if (!right.contains(w) && !left.contains(w)) {
                        ok = false;
                        break;
                    }
                }
                if (ok) {
                    hull.b = b;
                    hull.c = c;
                    hull.sigma = sigma;
                    hull.theta_cover = slack;
                    hull.cover_found = true;
                    break;
                }
            }
        }
    }
    if (hull.cover_found) {
        const auto rep = commensurability({0.0, hull.b, hull.c, 1.0});
        hull.config_K = rep.K;
    }
    return hull;
}

CubeRootCrop cube_root_crop(double a, double delta, int n) {
    const Interval Tp{0.0, 1.0};
    const double R = 0.5 * (1.0 + a);
    const double m = 0.5 * (1.0 - a);
    const GeodesicNeighborhood guard{{-delta, 1.0 + delta}, kPi / 2.0};
    CubeRootCrop crop;
    crop.min_angle = kPi;
    crop.min_dist = std::numeric_limits<double>::infinity();
    const int rings = std::max(4, n / 64);
    const int spokes = std::max(16, n / rings);
    for (int i = 1; i <= rings; ++i) {
        const double r = R * i / (rings + 0.5);
        for (int k = 0; k < spokes; ++k) {
            const double phi = 2.0 * kPi * (k + 0.5) / spokes;
            const cplx z = cplx(m, 0.0) + std::polar(r, phi);
            if (z.imag() == 0.0 || (z.real() < 0.0 && std::abs(z.imag()) < 1e-14))
                continue;  // stay off the branch cut
            const cplx w = principal_cbrt(z);
            if (guard.contains(w)) continue;
            const double d = interval_dist(w, Tp);
            crop.min_dist = std::min(crop.min_dist, d);
            crop.max_dist = std::max(crop.max_dist, d);
            crop.min_angle = std::min(crop.min_angle, angle_to_interval(w, Tp));
            ++crop.retained;
        }
    }
    return crop;
}

ConfigurationReport commensurability(const std::vector<double>& points) {
    if (points.size() < 3)
        throw std::domain_error("commensurability: need at least 3 points");
    double shortest = std::numeric_limits<double>::infinity();
    double longest = 0.0;
    for (std::size_t i = 0; i < points.size(); ++i)
        for (std::size_t k = i + 1; k < points.size(); ++k) {
            const double len = std::abs(points[i] - points[k]);
            if (len == 0.0)
                throw std::domain_error("commensurability: duplicate points");
            shortest = std::min(shortest, len);
            longest = std::max(longest, len);
        }
    return ConfigurationReport{points, longest / shortest};
}

GoodAngleReport good_angle_check(const ConformalBranch& branch,
                                 const Interval& J, const Interval& J2,
                                 double eps, const std::vector<cplx>& samples) {
    GoodAngleReport rep;
    for (const cplx& z : samples) {
        const double dz = interval_dist(z, J);
        if (dz < J.length() || angle_to_interval(z, J) < eps) {
            ++rep.skipped;
            continue;
        }
        const cplx w = branch(z);
        const double in = dz / J.length();
        const double out = interval_dist(w, J2) / J2.length();
        rep.C = std::max(rep.C, out / in);
        ++rep.used;
    }
    return rep;
}

}  // namespace cclab
