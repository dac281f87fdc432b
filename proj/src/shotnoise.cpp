#include "wv/shotnoise.hpp"

#include <cmath>

namespace wv {

namespace {

// splitmix64 finalizer.
uint64_t mix64(uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

constexpr uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

}  // namespace

RandomStream RandomStream::for_trial(uint64_t master_seed, uint64_t trial) {
    return RandomStream(mix64(master_seed + kGolden * (trial + 1)));
}

uint64_t RandomStream::next_u64() {
    state_ += kGolden;
    return mix64(state_);
}

double RandomStream::next_unit() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

uint64_t sample_poisson(double mean, RandomStream& stream) {
    if (!(mean >= 0.0) || !std::isfinite(mean)) throw NegativeMean{};
    if (mean == 0.0) return 0;

    if (mean < 30.0) {
        // Inversion by sequential search.
        const double u = stream.next_unit();
        double p = std::exp(-mean);
        double cdf = p;
        uint64_t k = 0;
        while (u > cdf) {
            ++k;
            p *= mean / static_cast<double>(k);
            cdf += p;
            if (p < 1e-300) break;  // u in the far tail; cdf has saturated
        }
        return k;
    }

    // Hoermann's PTRS transformed rejection, valid for mean >= 10.
    const double b = 0.931 + 2.53 * std::sqrt(mean);
    const double a = -0.059 + 0.02483 * b;
    const double inv_alpha = 1.1239 + 1.1328 / (b - 3.4);
    const double v_r = 0.9277 - 3.6224 / (b - 2.0);
    const double log_mean = std::log(mean);

    for (;;) {
        const double u = stream.next_unit() - 0.5;
        const double v = stream.next_unit();
        const double us = 0.5 - std::abs(u);
        const double kf = std::floor((2.0 * a / us + b) * u + mean + 0.43);
        if (us >= 0.07 && v <= v_r) return static_cast<uint64_t>(kf);
        if (kf < 0.0 || (us < 0.013 && v > us)) continue;
        const double k = kf;
        if (std::log(v * inv_alpha / (a / (us * us) + b)) <=
            k * log_mean - mean - std::lgamma(k + 1.0))
            return static_cast<uint64_t>(kf);
    }
}

namespace {

// One two-count trial; the estimate maps the count ratio through `invert`.
template <class Invert>
std::vector<TrialResult> run_trials(double ref_mean, double exp_mean, const CountingPlan& plan,
                                    Exec exec, Invert invert) {
    if (plan.trials < 1) throw InvalidArgument("trials must be >= 1");
    if (!(plan.n_ref_mean > 0.0)) throw InvalidArgument("n_ref_mean must be > 0");
    std::vector<TrialResult> out(static_cast<size_t>(plan.trials));
    parallel_for(
        plan.trials,
        [&](int64_t t) {
            RandomStream stream = RandomStream::for_trial(plan.seed, static_cast<uint64_t>(t));
            TrialResult& r = out[static_cast<size_t>(t)];
            r.n_ref = sample_poisson(ref_mean, stream);
            r.n_exp = sample_poisson(exp_mean, stream);
            r.valid = r.n_ref > 0;
            r.estimate = r.valid ? invert(static_cast<double>(r.n_exp) / static_cast<double>(r.n_ref))
                                 : 0.0;
        },
        exec);
    return out;
}

}  // namespace

std::vector<TrialResult> simulate_estimator(const StateVector& pre, const StateVector& post,
                                            const ComponentSet& components, EstimatorKind kind,
                                            double coupling, const CountingPlan& plan, Exec exec) {
    if (std::abs(inner(post, pre)) <= kOverlapTol) throw DegenerateBaseline{};
    const ProbabilityReport report = exact_postselection_prob(pre, post, components);
    const double ratio = report.exact / report.baseline;
    if (kind == EstimatorKind::Re) {
        if (!(coupling > 0.0)) throw NonpositiveAlpha{};
        return run_trials(plan.n_ref_mean, plan.n_ref_mean * ratio, plan, exec,
                          [=](double r) { return (1.0 - r) / (2.0 * coupling); });
    }
    if (coupling == 0.0 || !std::isfinite(coupling)) throw ZeroTheta{};
    return run_trials(plan.n_ref_mean, plan.n_ref_mean * ratio, plan, exec,
                      [=](double r) { return (r - 1.0) / (2.0 * coupling); });
}

std::vector<TrialResult> simulate_readout(const StateVector& pre, const StateVector& post,
                                          const MeterQubit& meter, const CountingPlan& plan,
                                          Exec exec) {
    if (std::abs(inner(post, pre)) <= kOverlapTol) throw DegenerateBaseline{};
    const double g = meter.strength();
    if (!(g > 0.0)) throw ZeroStrength{};
    const double baseline = std::norm(inner(post, pre));
    const MeterProbs probs = postselect_meter_probs(couple_cnot(pre, meter), post);
    // Reference count is the post-selected total in the meter run.
    const double ref_mean = plan.n_ref_mean * probs.prob_phi / baseline;
    const double gbar2 = meter.gamma_bar() * meter.gamma_bar();
    return run_trials(ref_mean, ref_mean * probs.prob_1_given_phi, plan, exec,
                      [=](double r) { return (r - gbar2) / g; });
}

EstimateStats summarize(const std::vector<TrialResult>& trials) {
    EstimateStats s{0, 0, 0.0, 0.0};
    double sum = 0.0;
    for (const TrialResult& t : trials) {
        if (!t.valid) {
            ++s.invalid_trials;
            continue;
        }
        ++s.valid_trials;
        sum += t.estimate;
    }
    if (s.valid_trials == 0) return s;
    s.mean = sum / s.valid_trials;
    double ss = 0.0;
    for (const TrialResult& t : trials) {
        if (!t.valid) continue;
        const double d = t.estimate - s.mean;
        ss += d * d;
    }
    s.stddev = s.valid_trials > 1 ? std::sqrt(ss / (s.valid_trials - 1)) : 0.0;
    return s;
}

namespace {

double poisson_ratio_sigma(double ratio, double ref_mean) {
    return ratio * std::sqrt(1.0 / (ref_mean * ratio) + 1.0 / ref_mean);
}

}  // namespace

double analytic_sigma(double prob_ratio, double n_ref_mean, double alpha_or_theta,
                      EstimatorKind kind) {
    (void)kind;  // Re and Im share the propagation formula
    if (!(prob_ratio > 0.0) || !(n_ref_mean > 0.0) || !(alpha_or_theta > 0.0))
        throw InvalidArgument("analytic_sigma needs positive inputs");
    return poisson_ratio_sigma(prob_ratio, n_ref_mean) / (2.0 * alpha_or_theta);
}

double analytic_sigma_readout(double prob_1_given_phi, double n_post_mean, double strength) {
    if (!(prob_1_given_phi > 0.0) || !(n_post_mean > 0.0) || !(strength > 0.0))
        throw InvalidArgument("analytic_sigma_readout needs positive inputs");
    return poisson_ratio_sigma(prob_1_given_phi, n_post_mean) / strength;
}

Fig3Tables fig3_dataset(double n_ref_mean, int points) {
    if (points < 2) throw InvalidArgument("need at least 2 sweep points");
    const StateVector pre({1.0, 1.0});
    const StateVector post({2.0, -1.0});
    const double baseline = std::norm(inner(post, pre));

    Fig3Tables tables;
    tables.readout.reserve(static_cast<size_t>(points));
    tables.estimate.reserve(static_cast<size_t>(points));

    // Log-spaced sweeps reach the small-coupling limit where both curves
    // approach the weak value.
    const auto log_grid = [points](double lo, double hi, int i) {
        const double t = static_cast<double>(i) / (points - 1);
        return lo * std::pow(hi / lo, t);
    };

    for (int i = 0; i < points; ++i) {
        const double g = log_grid(1e-3, 1.0, i);
        const MeterQubit meter = meter_from_strength(g);
        const MeterProbs probs = postselect_meter_probs(couple_cnot(pre, meter), post);
        tables.readout.push_back(
            {g, normalized_readout(probs.prob_1_given_phi, meter),
             analytic_sigma_readout(probs.prob_1_given_phi,
                                    n_ref_mean * probs.prob_phi / baseline, g)});
    }

    for (int i = 0; i < points; ++i) {
        const double alpha = log_grid(1e-3, 0.5, i);
        ComponentSet comps;
        comps.add(PathComponent::attenuator(1, alpha));
        const ProbabilityReport report = exact_postselection_prob(pre, post, comps);
        tables.estimate.push_back(
            {alpha, estimate_re_weak_value(report.exact, report.baseline, alpha),
             analytic_sigma(report.exact / report.baseline, n_ref_mean, alpha,
                            EstimatorKind::Re)});
    }
    return tables;
}

}  // namespace wv
