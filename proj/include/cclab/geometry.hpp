// Slit-plane geometry: geodesic neighborhoods D_theta(J), the angle between
// a point and an interval, commensurability constants, and sampling checks
// for the Schwarz-lemma and cube-root inclusions.

#pragma once

#include <complex>
#include <functional>
#include <vector>

#include "cclab/circle_map.hpp"

namespace cclab {

// Interval on the real line; endpoints are stored as given (no order
// assumed), lo()/hi() give the canonical order.
struct Interval {
    double a = 0.0, b = 0.0;
    double lo() const { return a < b ? a : b; }
    double hi() const { return a < b ? b : a; }
    double length() const { return hi() - lo(); }
    double mid() const { return 0.5 * (a + b); }
};

// Euclidean distance from z to the interval.
double interval_dist(cplx z, const Interval& J);

// The angle between z and J: the least angle the segments [a,z], [b,z] make
// with the complementary rays of the real line, in [0, pi].
// Throws std::domain_error at the endpoints.
double angle_to_interval(cplx z, const Interval& J);

// Geodesic neighborhood D_theta(J) of J in the slit plane C_J: the union of
// two R-symmetric disc segments meeting R at angle theta in (0, pi).
// D_{pi/2}(J) is the Euclidean disc with diameter J.
struct GeodesicNeighborhood {
    Interval j;
    double theta = 1.5707963267948966;

    // Signed membership margin: negative inside, positive outside; the
    // boundary sits at zero. For z off the real line this is
    // (pi - theta) - arg((z-b)/(z-a)) mirrored into the upper half-plane.
    double margin(cplx z) const;
    bool contains(cplx z) const { return margin(z) < 0.0; }

    // n boundary points, cosine-clustered toward the interval endpoints,
    // split between the upper and lower arcs.
    std::vector<cplx> boundary_samples(int n) const;
};

inline bool in_geodesic_nbhd(cplx z, const GeodesicNeighborhood& d) {
    return d.contains(z);
}

using ConformalBranch = std::function<cplx(cplx)>;

struct SchwarzReport {
    double max_margin = 0.0;  // <= 0 means the inclusion held on samples
    int samples = 0;
};

// Samples the boundary of D_theta(J), maps the samples through the branch
// and reports the worst membership margin relative to D_theta(J2).
SchwarzReport schwarz_sample_check(const ConformalBranch& branch,
                                   const Interval& J, const Interval& J2,
                                   double theta, int n);

struct CubeRootHull {
    double theta_prime = 0.0;  // smallest angle with phi(bd D_theta(T)) in D_theta'([0,1])
    double b = 0.0, c = 0.0;   // two-disc cover D_{theta_cover}([b,1]) u D_sigma([0,c])
    double sigma = 0.0;        // < pi/2 on success
    double theta_cover = 0.0;
    double config_K = 0.0;     // K-boundedness of {0, b, c, 1}
    bool cover_found = false;
};

// Principal branch of the cube root (slit along R_-).
cplx principal_cbrt(cplx z);

// Hull data for the image of D_theta([-a,1]) under the principal cube root.
CubeRootHull cube_root_hull(double a, double theta, int n);

struct CubeRootCrop {
    double min_angle = 0.0;    // min angle(z', [0,1]) over retained samples
    double min_dist = 0.0, max_dist = 0.0;
    int retained = 0;
};

// Samples phi(D([-a,1])) \ D([-delta, 1+delta]) and reports the angle and
// distance ranges seen there.
CubeRootCrop cube_root_crop(double a, double delta, int n);

struct ConfigurationReport {
    std::vector<double> points;
    double K = 1.0;  // max ratio of pairwise interval lengths
};

// Smallest K such that the point configuration is K-bounded.
// Throws std::domain_error on fewer than 3 distinct points or duplicates.
ConfigurationReport commensurability(const std::vector<double>& points);

struct GoodAngleReport {
    double C = 0.0;  // smallest constant covering all used samples
    int used = 0;
    int skipped = 0;  // samples violating the preconditions
};

// Fits the distortion constant of the good-angle estimate:
// dist(branch z, J2)/|J2| <= C dist(z,J)/|J| over samples with
// dist(z,J) >= |J| and angle(z,J) >= eps.
GoodAngleReport good_angle_check(const ConformalBranch& branch,
                                 const Interval& J, const Interval& J2,
                                 double eps, const std::vector<cplx>& samples);

}  // namespace cclab
