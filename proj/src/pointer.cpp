#include "wv/pointer.hpp"

#include <algorithm>
#include <cmath>

#include "wv/fft.hpp"

namespace wv {

GaussianPointer::GaussianPointer(double sigma, double grid_min, double grid_max,
                                 std::vector<cdouble> amplitudes)
    : sigma_(sigma), grid_min_(grid_min), grid_max_(grid_max), amp_(std::move(amplitudes)) {
    if (!(sigma > 0.0)) throw BadGrid("sigma must be > 0");
    if (!(grid_min < grid_max)) throw BadGrid("grid_min must be below grid_max");
    if (!fft::is_power_of_two(amp_.size()) || amp_.size() < 256)
        throw BadGrid("n_points must be a power of two >= 256");
    double norm2 = 0.0;
    for (const cdouble& a : amp_) norm2 += std::norm(a);
    norm2 *= dq();
    if (!(norm2 > 0.0)) throw BadGrid("zero amplitude vector");
    const double inv = 1.0 / std::sqrt(norm2);
    for (cdouble& a : amp_) a *= inv;
}

GaussianPointer make_gaussian(double sigma, double half_width_sigmas, int n_points) {
    if (!(sigma > 0.0)) throw BadGrid("sigma must be > 0");
    if (!(half_width_sigmas >= 8.0)) throw BadGrid("half width must be >= 8 sigma");
    if (n_points < 256 || !fft::is_power_of_two(static_cast<size_t>(n_points)))
        throw BadGrid("n_points must be a power of two >= 256");
    const double hw = half_width_sigmas * sigma;
    std::vector<cdouble> amp(static_cast<size_t>(n_points));
    const double dq = 2.0 * hw / n_points;
    for (int j = 0; j < n_points; ++j) {
        const double q = -hw + j * dq;
        amp[static_cast<size_t>(j)] = std::exp(-q * q / (2.0 * sigma * sigma));
    }
    return GaussianPointer(sigma, -hw, hw, std::move(amp));
}

namespace {

// Spectral moments from unnormalized Fourier coefficients.
void momentum_moments(const std::vector<cdouble>& spectrum, double length, Exec exec,
                      double& mean_p, double& var_p) {
    const size_t n = spectrum.size();
    const double total = block_sum(
        static_cast<int64_t>(n), [&](int64_t m) { return std::norm(spectrum[static_cast<size_t>(m)]); },
        exec);
    const double m1 = block_sum(
        static_cast<int64_t>(n),
        [&](int64_t m) {
            return fft::angular_frequency(static_cast<size_t>(m), n, length) *
                   std::norm(spectrum[static_cast<size_t>(m)]);
        },
        exec);
    mean_p = m1 / total;
    const double m2 = block_sum(
        static_cast<int64_t>(n),
        [&](int64_t m) {
            const double p = fft::angular_frequency(static_cast<size_t>(m), n, length) - mean_p;
            return p * p * std::norm(spectrum[static_cast<size_t>(m)]);
        },
        exec);
    var_p = m2 / total;
}

void position_moments(const GaussianPointer& ptr, Exec exec, double& mean_q, double& var_q) {
    const auto& amp = ptr.amplitudes();
    const int64_t n = ptr.n_points();
    const double dq = ptr.dq();
    const double total =
        block_sum(n, [&](int64_t j) { return std::norm(amp[static_cast<size_t>(j)]); }, exec) * dq;
    mean_q = block_sum(n,
                       [&](int64_t j) {
                           return ptr.q(static_cast<int>(j)) * std::norm(amp[static_cast<size_t>(j)]);
                       },
                       exec) *
             dq / total;
    var_q = block_sum(n,
                      [&](int64_t j) {
                          const double d = ptr.q(static_cast<int>(j)) - mean_q;
                          return d * d * std::norm(amp[static_cast<size_t>(j)]);
                      },
                      exec) *
            dq / total;
}

// Grid must reach 8 sigma past the largest displacement.
void check_margin(const GaussianPointer& ptr, double g, const SpectralObservable& obs) {
    double max_disp = 0.0;
    for (double o : obs.eigenvalues()) max_disp = std::max(max_disp, std::abs(g * o));
    const double needed = 8.0 * ptr.sigma() + max_disp;
    const double have = std::min(-ptr.grid_min(), ptr.grid_max());
    if (needed > have)
        throw GridOverflow("displacement needs half width " + std::to_string(needed) +
                           " but grid reaches " + std::to_string(have));
}

void check_boundary(const std::vector<cdouble>& amp) {
    if (std::abs(amp.front()) >= kBoundaryTol || std::abs(amp.back()) >= kBoundaryTol)
        throw GridOverflow("non-negligible amplitude at the grid boundary");
}

}  // namespace

PointerReadout pointer_moments(const GaussianPointer& pointer, Exec exec) {
    PointerReadout r{};
    position_moments(pointer, exec, r.mean_q, r.var_q);
    std::vector<cdouble> spectrum = pointer.amplitudes();
    fft::forward(spectrum);
    momentum_moments(spectrum, pointer.grid_max() - pointer.grid_min(), exec, r.mean_p, r.var_p);
    r.postselect_prob = 1.0;
    return r;
}

EvolveResult evolve_and_postselect(const StateVector& pre, const StateVector& post,
                                   const SpectralObservable& obs, double g,
                                   const GaussianPointer& pointer, Exec exec) {
    if (pre.dim() != post.dim()) throw DimMismatch(pre.dim(), post.dim());
    if (pre.dim() != obs.dim()) throw DimMismatch(pre.dim(), obs.dim());
    if (std::abs(inner(post, pre)) <= kOverlapTol) throw DegenerateOverlap{};
    check_margin(pointer, g, obs);

    const size_t n = pointer.amplitudes().size();
    const double length = pointer.grid_max() - pointer.grid_min();

    // Post-selected branch coefficients <post|o_k><o_k|pre>.
    const size_t nk = obs.eigenvalues().size();
    std::vector<cdouble> coeff(nk);
    for (size_t k = 0; k < nk; ++k)
        coeff[k] = inner(post, obs.eigenvectors()[k]) * inner(obs.eigenvectors()[k], pre);

    std::vector<cdouble> spectrum = pointer.amplitudes();
    fft::forward(spectrum);

    // Phi~(P) = Psi~(P) * sum_k c_k exp(-i P g o_k): one pass in momentum space.
    parallel_for(
        static_cast<int64_t>(n),
        [&](int64_t m) {
            const double p = fft::angular_frequency(static_cast<size_t>(m), n, length);
            cdouble f = 0.0;
            for (size_t k = 0; k < nk; ++k)
                f += coeff[k] * std::polar(1.0, -p * g * obs.eigenvalues()[k]);
            spectrum[static_cast<size_t>(m)] *= f;
        },
        exec);

    double mean_p = 0.0, var_p = 0.0;
    momentum_moments(spectrum, length, exec, mean_p, var_p);

    std::vector<cdouble> phi = spectrum;
    fft::inverse(phi);

    const double prob =
        block_sum(static_cast<int64_t>(n),
                  [&](int64_t j) { return std::norm(phi[static_cast<size_t>(j)]); }, exec) *
        pointer.dq();
    if (!(prob > 1e-18)) throw DegenerateOverlap{};

    GaussianPointer out(pointer.sigma(), pointer.grid_min(), pointer.grid_max(), std::move(phi));
    check_boundary(out.amplitudes());

    PointerReadout r{};
    position_moments(out, exec, r.mean_q, r.var_q);
    r.mean_p = mean_p;
    r.var_p = var_p;
    r.postselect_prob = prob;
    return EvolveResult{std::move(out), r};
}

PredictedShifts predicted_shifts(const WeakValueResult& wv, double g,
                                 const GaussianPointer& pointer) {
    const PointerReadout m = pointer_moments(pointer);
    PredictedShifts s{};
    s.dq = g * wv.re;
    s.dp = 2.0 * g * wv.im * m.var_p;
    s.weak_regime = std::abs(g) * std::abs(wv.value) <= 0.1 * pointer.sigma();
    return s;
}

std::vector<double> ensemble_distribution(const StateVector& pre, const SpectralObservable& obs,
                                          double g, const GaussianPointer& pointer, Exec exec) {
    if (pre.dim() != obs.dim()) throw DimMismatch(pre.dim(), obs.dim());
    check_margin(pointer, g, obs);

    const size_t n = pointer.amplitudes().size();
    const double length = pointer.grid_max() - pointer.grid_min();
    const size_t nk = obs.eigenvalues().size();

    std::vector<double> weight(nk);
    for (size_t k = 0; k < nk; ++k) weight[k] = std::norm(inner(obs.eigenvectors()[k], pre));

    std::vector<cdouble> spectrum = pointer.amplitudes();
    fft::forward(spectrum);

    std::vector<std::vector<cdouble>> branch(nk);
#ifdef _OPENMP
#pragma omp parallel for schedule(static) if (exec == Exec::Parallel)
#endif
    for (size_t k = 0; k < nk; ++k) {
        std::vector<cdouble> b(n);
        for (size_t m = 0; m < n; ++m) {
            const double p = fft::angular_frequency(m, n, length);
            b[m] = spectrum[m] * std::polar(1.0, -p * g * obs.eigenvalues()[k]);
        }
        fft::inverse(b);
        branch[k] = std::move(b);
    }

    for (const auto& b : branch) check_boundary(b);

    std::vector<double> density(n);
    parallel_for(
        static_cast<int64_t>(n),
        [&](int64_t j) {
            double d = 0.0;
            for (size_t k = 0; k < nk; ++k) d += weight[k] * std::norm(branch[k][static_cast<size_t>(j)]);
            density[static_cast<size_t>(j)] = d;
        },
        exec);
    return density;
}

}  // namespace wv
