#include "wv/backaction.hpp"

#include <cmath>
#include <stdexcept>

namespace wv {

PathComponent PathComponent::phase(int path_index, double theta) {
    if (path_index < 0) throw InvalidArgument("negative path index");
    if (!std::isfinite(theta)) throw InvalidArgument("phase theta must be finite");
    return PathComponent(path_index, Kind::Phase, theta, 0.0, std::polar(1.0, -theta));
}

PathComponent PathComponent::attenuator(int path_index, double alpha) {
    if (path_index < 0) throw InvalidArgument("negative path index");
    if (!std::isfinite(alpha) || alpha < 0.0)
        throw InvalidArgument("attenuation exponent alpha must be finite and >= 0");
    return PathComponent(path_index, Kind::Attenuator, 0.0, alpha, std::exp(-alpha));
}

PathComponent PathComponent::general(int path_index, cdouble c) {
    if (path_index < 0) throw InvalidArgument("negative path index");
    const double mod = std::abs(c);
    if (!std::isfinite(mod) || mod == 0.0)
        throw InvalidArgument("general c-number must be finite and nonzero");
    // theta/alpha recorded so C = exp(-alpha) exp(-i theta) holds exactly;
    // alpha < 0 means gain.
    return PathComponent(path_index, Kind::General, -std::arg(c), -std::log(mod), c);
}

double PathComponent::transmittance() const { return std::norm(c_); }

bool PathComponent::nonphysical() const { return std::abs(c_) > 1.0 + 1e-12; }

PathComponent compose(const PathComponent& a, const PathComponent& b) {
    if (a.path_ != b.path_)
        throw InvalidArgument("cannot compose components on different paths");
    using Kind = PathComponent::Kind;
    if (a.kind_ == Kind::Phase && b.kind_ == Kind::Phase)
        return PathComponent::phase(a.path_, a.theta_ + b.theta_);
    if (a.kind_ == Kind::Attenuator && b.kind_ == Kind::Attenuator)
        return PathComponent::attenuator(a.path_, a.alpha_ + b.alpha_);
    return PathComponent::general(a.path_, a.c_ * b.c_);
}

void ComponentSet::add(const PathComponent& component) {
    auto it = by_path_.find(component.path_index());
    if (it == by_path_.end()) {
        by_path_.emplace(component.path_index(), component);
    } else {
        it->second = compose(it->second, component);
    }
}

cdouble ComponentSet::multiplier(int path_index) const {
    auto it = by_path_.find(path_index);
    return it == by_path_.end() ? cdouble{1.0, 0.0} : it->second.c();
}

int ComponentSet::max_path() const {
    return by_path_.empty() ? -1 : by_path_.rbegin()->first;
}

bool ComponentSet::weak_condition() const {
    for (const auto& [path, comp] : by_path_) {
        if (std::abs(comp.theta()) > kWeakConditionMax) return false;
        if (std::abs(comp.alpha()) > kWeakConditionMax) return false;
    }
    return true;
}

std::vector<PathComponent> ComponentSet::components() const {
    std::vector<PathComponent> out;
    out.reserve(by_path_.size());
    for (const auto& [path, comp] : by_path_) out.push_back(comp);
    return out;
}

namespace {

void check_paths(const ComponentSet& components, int dim) {
    const int max = components.max_path();
    if (max >= dim) throw PathOutOfRange(max, dim);
}

double first_order_sum(const ComponentSet& components, const std::vector<cdouble>& wv) {
    double s = 0.0;
    for (const auto& [path, comp] : components) {
        const cdouble w = wv[static_cast<size_t>(path)];
        s += 2.0 * comp.theta() * w.imag() - 2.0 * comp.alpha() * w.real();
    }
    return s;
}

}  // namespace

ProbabilityReport exact_postselection_prob(const StateVector& pre, const StateVector& post,
                                           const ComponentSet& components) {
    if (pre.dim() != post.dim()) throw DimMismatch(pre.dim(), post.dim());
    check_paths(components, pre.dim());

    const cdouble overlap = inner(post, pre);
    if (std::abs(overlap) <= kOverlapTol) throw DegenerateOverlap{};
    const double baseline = std::norm(overlap);

    const std::vector<cdouble> wv = projector_weak_values(pre, post);
    cdouble weighted = 0.0;
    double weighted_mag = 0.0;  // non-cancelling magnitude, sets the check scale
    for (int k = 0; k < pre.dim(); ++k) {
        const cdouble term = components.multiplier(k) * wv[static_cast<size_t>(k)];
        weighted += term;
        weighted_mag += std::abs(term);
    }
    const double exact = baseline * std::norm(weighted);

    // Independent route: apply diag(C) to the pre-selection amplitudes.
    cdouble direct = 0.0;
    for (int k = 0; k < pre.dim(); ++k)
        direct += std::conj(post.amplitude(k)) * components.multiplier(k) * pre.amplitude(k);
    const double exact_direct = std::norm(direct);
    const double tol = 1e-12 * std::max(1.0, baseline * weighted_mag * weighted_mag);
    if (std::abs(exact - exact_direct) > tol)
        throw std::logic_error("post-selection probability routes disagree");

    return ProbabilityReport{exact, baseline * (1.0 + first_order_sum(components, wv)),
                             baseline, wv, components.weak_condition()};
}

double unitary_kick_prob(const StateVector& pre, const StateVector& post,
                         const SpectralObservable& obs, double theta) {
    if (pre.dim() != post.dim()) throw DimMismatch(pre.dim(), post.dim());
    if (pre.dim() != obs.dim()) throw DimMismatch(pre.dim(), obs.dim());
    if (std::abs(inner(post, pre)) <= kOverlapTol) throw DegenerateOverlap{};

    cdouble amp = 0.0;
    for (size_t k = 0; k < obs.eigenvalues().size(); ++k) {
        const cdouble kick = std::polar(1.0, -theta * obs.eigenvalues()[k]);
        amp += kick * inner(post, obs.eigenvectors()[k]) * inner(obs.eigenvectors()[k], pre);
    }
    return std::norm(amp);
}

double first_order_prob(const StateVector& pre, const StateVector& post,
                        const ComponentSet& components) {
    if (pre.dim() != post.dim()) throw DimMismatch(pre.dim(), post.dim());
    check_paths(components, pre.dim());
    const cdouble overlap = inner(post, pre);
    if (std::abs(overlap) <= kOverlapTol) throw DegenerateOverlap{};
    const double baseline = std::norm(overlap);
    const std::vector<cdouble> wv = projector_weak_values(pre, post);
    return baseline * (1.0 + first_order_sum(components, wv));
}

double estimate_re_weak_value(double prob_with, double prob_baseline, double alpha) {
    if (!(alpha > 0.0)) throw NonpositiveAlpha{};
    if (!(prob_baseline > 0.0)) throw ZeroBaseline{};
    return (1.0 - prob_with / prob_baseline) / (2.0 * alpha);
}

double estimate_im_weak_value(double prob_with, double prob_baseline, double theta) {
    if (theta == 0.0 || !std::isfinite(theta)) throw ZeroTheta{};
    if (!(prob_baseline > 0.0)) throw ZeroBaseline{};
    return (prob_with / prob_baseline - 1.0) / (2.0 * theta);
}

}  // namespace wv
