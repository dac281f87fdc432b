#ifndef WV_POINTER_HPP
#define WV_POINTER_HPP

#include <vector>

#include "wv/parallel.hpp"
#include "wv/qstate.hpp"

namespace wv {

/// Amplitude above this at a grid edge means the periodic displacement
/// wrapped around and the run is invalid.
inline constexpr double kBoundaryTol = 1e-12;

/// Pointer wavefunction on a uniform periodic position grid
/// q_j = grid_min + j * dq, j = 0..n-1 (right endpoint excluded).
/// Normalized so sum |amp_j|^2 * dq = 1. sigma is the width parameter of
/// the Gaussian the pointer was built from. hbar = 1 throughout.
class GaussianPointer {
public:
    GaussianPointer(double sigma, double grid_min, double grid_max,
                    std::vector<cdouble> amplitudes);

    double sigma() const { return sigma_; }
    double grid_min() const { return grid_min_; }
    double grid_max() const { return grid_max_; }
    int n_points() const { return static_cast<int>(amp_.size()); }
    double dq() const { return (grid_max_ - grid_min_) / static_cast<double>(amp_.size()); }
    double q(int j) const { return grid_min_ + static_cast<double>(j) * dq(); }
    const std::vector<cdouble>& amplitudes() const { return amp_; }

private:
    double sigma_;
    double grid_min_;
    double grid_max_;
    std::vector<cdouble> amp_;
};

struct PointerReadout {
    double mean_q;
    double mean_p;
    double var_q;
    double var_p;
    double postselect_prob;
};

struct PredictedShifts {
    double dq;  ///< g * Re(wv)
    double dp;  ///< 2 * g * Im(wv) * var_p  (= g * Im(wv) / sigma^2 for the initial Gaussian)
    bool weak_regime;  ///< false when g * |wv| > 0.1 * sigma
};

struct EvolveResult {
    GaussianPointer pointer;  ///< post-selected pointer state, renormalized
    PointerReadout readout;
};

/// Gaussian exp(-Q^2 / 2 sigma^2) sampled on [-hw*sigma, hw*sigma).
/// n_points must be a power of two >= 256 and hw >= 8.
GaussianPointer make_gaussian(double sigma, double half_width_sigmas, int n_points);

/// Position/momentum moments of a pointer state (momentum spectrally).
PointerReadout pointer_moments(const GaussianPointer& pointer, Exec exec = kDefaultExec);

/// Couple the system to the pointer via exp(-i g O P), then project the
/// system on `post`. The per-eigenvalue displacements are applied in the
/// momentum representation, exact up to periodic wraparound.
EvolveResult evolve_and_postselect(const StateVector& pre, const StateVector& post,
                                   const SpectralObservable& obs, double g,
                                   const GaussianPointer& pointer, Exec exec = kDefaultExec);

/// First-order shift predictions for a measured weak value.
PredictedShifts predicted_shifts(const WeakValueResult& wv, double g,
                                 const GaussianPointer& pointer);

/// Pointer position density without post-selection:
/// sum_k |<o_k|pre>|^2 |Psi(Q - g o_k)|^2 on the pointer grid.
std::vector<double> ensemble_distribution(const StateVector& pre, const SpectralObservable& obs,
                                          double g, const GaussianPointer& pointer,
                                          Exec exec = kDefaultExec);

}  // namespace wv

#endif  // WV_POINTER_HPP
