// Critical commuting pairs and the renormalization operator.
//
// Pairs are stored as iterate records (count, integer translation) over the
// parent circle map, so renormalization is exact integer bookkeeping; the
// affine rescaling to the normalized chart is applied lazily at evaluation.

#pragma once

#include <cstdint>

#include "cclab/circle_map.hpp"
#include "cclab/geometry.hpp"
#include "cclab/rotation.hpp"

namespace cclab {

struct IterateRecord {
    std::int64_t iterates = 1;
    std::int64_t translation = 0;
};

// Commuting pair (eta|I_eta, xi|I_xi) in the normalized chart:
//   eta(0) < 0 < xi(0),  xi(0) = 1 exactly,  I_eta = [0,1], I_xi = [eta(0),0].
// The chart is x_hat = scale * x_raw with a signed scale, so levels with the
// opposite orientation are handled by a negative scale.
class CommutingPair {
  public:
    CommutingPair(CriticalCircleMap base, IterateRecord eta, IterateRecord xi,
                  double scale)
        : base_(base), eta_(eta), xi_(xi), scale_(scale) {}

    const CriticalCircleMap& base() const { return base_; }
    const IterateRecord& eta_record() const { return eta_; }
    const IterateRecord& xi_record() const { return xi_; }
    double scale() const { return scale_; }

    double eta(double x) const { return apply(eta_, x); }
    double xi(double x) const { return apply(xi_, x); }
    cplx eta(cplx z) const { return apply(eta_, z); }
    cplx xi(cplx z) const { return apply(xi_, z); }

    double eta0() const { return eta(0.0); }
    double xi0() const { return xi(0.0); }

  private:
    template <typename T>
    T apply(const IterateRecord& rec, T x) const {
        T w = x / scale_;
        for (std::int64_t i = 0; i < rec.iterates; ++i) w = base_.lift(w);
        return scale_ * (w - static_cast<double>(rec.translation));
    }

    CriticalCircleMap base_;
    IterateRecord eta_, xi_;
    double scale_;
};

// The pair (f^{q_{m+1}}|I_m, f^{q_m}|I_{m+1}) in the normalized chart.
// Requires closest returns to level m+1; throws std::domain_error when the
// orbit is too shallow ("level too deep").
CommutingPair pair_from_map(const CriticalOrbit& orbit, int m);
CommutingPair pair_from_map(const CriticalCircleMap& f, int m);

// Renormalization: (eta^r o xi|I_xi, eta|[0, eta^r(xi 0)]) rescaled, where r
// is the first partial quotient of rho(pair). Throws std::runtime_error when
// the quotient iteration leaves the representable domain.
CommutingPair renormalize(const CommutingPair& pair);

// Rotation number of the glued circle map f_zeta, as an exact rational
// (q-p)/q from the deepest closest return of the glued dynamics, expanded
// into partial quotients. max_q bounds the detected denominator.
RotationNumber rotation_number_of_pair(const CommutingPair& pair,
                                       std::int64_t budget,
                                       std::int64_t max_q = 1'000'000);

// Max of |eta(xi(x)) - xi(eta(x))| over a grid on the common extension.
double commutation_residual(const CommutingPair& pair, int n_samples);

// Epstein-class certificate: relative margin s of the real monotone
// extension J_tilde of J = (half map)(its interval), minimized over the two
// halves. s = 0 means no extension was certified.
struct EpsteinDescriptor {
    double s = 0.0;
    Interval J, J_tilde;  // witness intervals of the minimizing half
};

EpsteinDescriptor epstein_check(const CommutingPair& pair, int grid = 64);

// Descriptor for explicitly given witness intervals (degenerate cases).
EpsteinDescriptor epstein_from_intervals(const Interval& J,
                                         const Interval& J_tilde);

}  // namespace cclab
