#ifndef WV_SHOTNOISE_HPP
#define WV_SHOTNOISE_HPP

#include <cstdint>
#include <vector>

#include "wv/backaction.hpp"
#include "wv/parallel.hpp"
#include "wv/qubitmeter.hpp"

namespace wv {

/// Counter-based deterministic random stream (splitmix64). Streams for
/// different trials are derived independently from the master seed, so
/// trial i reproduces bit-for-bit no matter which thread runs it.
class RandomStream {
public:
    explicit RandomStream(uint64_t seed) : state_(seed) {}

    static RandomStream for_trial(uint64_t master_seed, uint64_t trial);

    uint64_t next_u64();
    /// Uniform double in [0, 1).
    double next_unit();

private:
    uint64_t state_;
};

/// Poisson draw: sequential-search inversion below mean 30, transformed
/// rejection (PTRS) above. Deterministic given the stream state.
uint64_t sample_poisson(double mean, RandomStream& stream);

struct CountingPlan {
    double n_ref_mean = 10000.0;  ///< expected counts at the baseline rate
    uint64_t seed = 0;
    int trials = 1;
};

struct TrialResult {
    uint64_t n_ref;
    uint64_t n_exp;
    double estimate;
    bool valid;  ///< false when n_ref = 0 (ratio undefined; excluded from stats)
};

enum class EstimatorKind { Re, Im };

/// Two-run photon-counting experiment: independent Poisson counts for the
/// baseline and the with-components run, pushed through the probability
/// estimator with the given coupling.
std::vector<TrialResult> simulate_estimator(const StateVector& pre, const StateVector& post,
                                            const ComponentSet& components, EstimatorKind kind,
                                            double coupling, const CountingPlan& plan,
                                            Exec exec = kDefaultExec);

/// Counting version of the CNOT-meter readout: Poisson counts for the
/// post-selected total and the meter-|1> subset, pushed through the
/// normalized readout.
std::vector<TrialResult> simulate_readout(const StateVector& pre, const StateVector& post,
                                          const MeterQubit& meter, const CountingPlan& plan,
                                          Exec exec = kDefaultExec);

struct EstimateStats {
    int valid_trials;
    int invalid_trials;
    double mean;
    double stddev;  ///< sample standard deviation over valid trials
};

EstimateStats summarize(const std::vector<TrialResult>& trials);

/// First-order shot-noise sigma of the Eq.-(16)-style estimators: the
/// ratio of two independent Poisson counts has variance
/// ratio^2 (1/(N ratio) + 1/N); the 1/(2 coupling) prefactor is shared by
/// the Re and Im variants.
double analytic_sigma(double prob_ratio, double n_ref_mean, double alpha_or_theta,
                      EstimatorKind kind);

/// Shot-noise sigma of the normalized readout at a post-selected count
/// budget of n_post_mean.
double analytic_sigma_readout(double prob_1_given_phi, double n_post_mean, double strength);

struct Fig3Tables {
    struct ReadoutRow {
        double g;
        double readout_ideal;
        double readout_sigma;
    };
    struct EstimateRow {
        double alpha;
        double n_est_ideal;
        double n_est_sigma;
    };
    std::vector<ReadoutRow> readout;    ///< normalized readout vs G
    std::vector<EstimateRow> estimate;  ///< probability estimator vs alpha
};

/// Estimator curves for the canonical wv = -1 instance
/// (pre = (1,1)/sqrt2, post = (2,-1)/sqrt5, attenuator/meter on path 1),
/// with shot-noise sigmas at the given baseline count budget.
Fig3Tables fig3_dataset(double n_ref_mean = 10000.0, int points = 50);

}  // namespace wv

#endif  // WV_SHOTNOISE_HPP
