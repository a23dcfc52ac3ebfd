// Critical circle maps: the standard sine family and the circle restriction
// of the degree-3 Blaschke product, exposed through their lifts.

#pragma once

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "cclab/return_chain.hpp"
#include "cclab/rotation.hpp"

namespace cclab {

using cplx = std::complex<double>;

// Signed circle representative in (-1/2, 1/2].
double circle_rep(double x);

enum class MapFamily { standard, blaschke_circle };

struct BranchAmbiguityError : std::runtime_error {
    int step_index;
    explicit BranchAmbiguityError(const std::string& what, int idx = -1)
        : std::runtime_error(what), step_index(idx) {}
};

// An analytic circle homeomorphism with one cubic critical point at 0,
// given by a lift F with F(x+1) = F(x)+1 and F'(0) = F''(0) = 0.
//
//   standard:         F(x) = x + theta - sin(2 pi x)/(2 pi), entire.
//   blaschke_circle:  F(x) = tau + x + arg(3 - e^{2 pi i x})/pi, the lift of
//                     e^{2 pi i tau} z^2 (z-3)/(1-3z) restricted to |z|=1;
//                     its analytic extension lives on |Im z| < log(3)/(2 pi).
//
// Immutable; all evaluators are pure.
class CriticalCircleMap {
  public:
    static CriticalCircleMap standard(double theta);
    static CriticalCircleMap blaschke_circle(double tau);

    MapFamily family() const { return family_; }
    double parameter() const { return param_; }

    double lift(double x) const;
    cplx lift(cplx z) const;
    cplx lift_derivative(cplx z) const;

    // Half-width of the strip on which the complex lift is defined.
    double strip_height() const;

    // One circle step on the fundamental domain [0,1): (y', wraps).
    std::pair<double, std::int64_t> circle_step(double y) const;

    // Unique circle preimage of the point with representative t, returned as
    // a representative in (-1/2, 1/2].
    double circle_preimage(double t) const;

  private:
    CriticalCircleMap(MapFamily f, double p) : family_(f), param_(p) {}
    MapFamily family_;
    double param_;
};

// Closest returns of the critical orbit: times q_m, winding numbers p_m and
// the signed representatives a_m = rep(f^{q_m}(0)), for levels m = 1..M.
// I_m = [0, a_m], |I_m| = |a_m|.
struct CriticalOrbit {
    CriticalCircleMap map;
    std::vector<std::int64_t> times;
    std::vector<std::int64_t> windings;
    std::vector<double> points;

    int levels() const { return static_cast<int>(times.size()); }
    std::int64_t q(int m) const { return times.at(m - 1); }       // m >= 1
    std::int64_t p(int m) const { return windings.at(m - 1); }
    double a(int m) const { return points.at(m - 1); }
    double interval_length(int m) const { return std::abs(points.at(m - 1)); }
};

struct RotationEstimate {
    double value = 0.0;
    std::int64_t p = 0, q = 1;  // deepest convergent found
    double error_bound = 1.0;   // 1/q^2
    bool rational_lock = false;
};

// Convergent-based rotation number. Guarantees |value - p/q| <= 1/q^2 for
// the deepest detected closest return. On a rational lock the locked p/q is
// returned with rational_lock set. Throws std::runtime_error when no return
// beyond the first is found within budget.
RotationEstimate rotation_estimate(const CriticalCircleMap& f,
                                   std::int64_t budget, double tol);
double rotation_number(const CriticalCircleMap& f, std::int64_t budget,
                       double tol);

// Closest returns of the critical point, stopping at max_level or when the
// return interval drops below min_interval. Throws RationalLockError when
// the orbit hits 0 to within 1e-14.
CriticalOrbit closest_returns(const CriticalCircleMap& f, int max_level,
                              double min_interval = 1e-11);

// Forward critical orbit as absolute lift values: u_j = F^j(0), j = 0..count.
std::vector<double> critical_orbit_lift(const CriticalCircleMap& f, std::int64_t count);

// Backward critical orbit representatives: b_j = rep(f^{-j}(0)), j = 0..count.
std::vector<double> backward_critical_orbit(const CriticalCircleMap& f, int count);

// Branch-continuous inverse of the lift: returns w near seed with
// |F(w) - target| < tol, following the branch selected by continuity along
// the segment from F(seed) to target. Throws BranchAmbiguityError when the
// Newton guard trips even after path refinement.
cplx inverse_branch(const CriticalCircleMap& f, cplx target, cplx seed,
                    double tol);

// Parameter with rotation_number(map(param)) = target, by bisection over the
// monotone parameter dependence. Works for both families (theta resp. tau).
double solve_parameter(MapFamily family, double target, double tol,
                       std::int64_t budget = 4'000'000);

}  // namespace cclab
