#include "wv/qstate.hpp"

#include <cmath>
#include <utility>

namespace wv {

namespace {

std::vector<cdouble> normalized(std::vector<cdouble> raw) {
    double norm2 = 0.0;
    bool any = false;
    for (const cdouble& a : raw) {
        if (std::abs(a) > 1e-12) any = true;
        norm2 += std::norm(a);
    }
    if (!any) throw ZeroVector{};
    const double inv = 1.0 / std::sqrt(norm2);
    for (cdouble& a : raw) a *= inv;
    return raw;
}

}  // namespace

StateVector::StateVector(std::vector<cdouble> raw_amplitudes)
    : amp_(normalized(std::move(raw_amplitudes))) {}

StateVector::StateVector(std::vector<cdouble> raw_amplitudes, std::vector<std::string> labels)
    : amp_(normalized(std::move(raw_amplitudes))), labels_(std::move(labels)) {
    if (!labels_.empty() && labels_.size() != amp_.size())
        throw InvalidArgument("label count does not match dimension");
}

StateVector StateVector::basis(int dim, int index) {
    if (dim < 1 || index < 0 || index >= dim)
        throw InvalidArgument("basis index out of range");
    std::vector<cdouble> a(static_cast<size_t>(dim), 0.0);
    a[static_cast<size_t>(index)] = 1.0;
    return StateVector(std::move(a));
}

StateVector make_state(std::vector<cdouble> raw_amplitudes) {
    return StateVector(std::move(raw_amplitudes));
}

cdouble inner(const StateVector& bra, const StateVector& ket) {
    if (bra.dim() != ket.dim()) throw DimMismatch(bra.dim(), ket.dim());
    cdouble s = 0.0;
    for (int i = 0; i < bra.dim(); ++i) s += std::conj(bra.amplitude(i)) * ket.amplitude(i);
    return s;
}

StateVector tensor(const StateVector& a, const StateVector& b) {
    std::vector<cdouble> out(static_cast<size_t>(a.dim()) * static_cast<size_t>(b.dim()));
    for (int i = 0; i < a.dim(); ++i)
        for (int j = 0; j < b.dim(); ++j)
            out[static_cast<size_t>(i * b.dim() + j)] = a.amplitude(i) * b.amplitude(j);
    return StateVector(std::move(out));
}

SpectralObservable::SpectralObservable(std::vector<double> eigenvalues,
                                       std::vector<StateVector> eigenvectors)
    : eigenvalues_(std::move(eigenvalues)), eigenvectors_(std::move(eigenvectors)) {
    const size_t n = eigenvalues_.size();
    if (n == 0) throw InvalidArgument("observable needs at least one eigenpair");
    if (eigenvectors_.size() != n)
        throw InvalidArgument("eigenvalue/eigenvector count mismatch");
    const int dim = eigenvectors_.front().dim();
    if (static_cast<size_t>(dim) != n)
        throw InvalidArgument("spectrum does not span the space: need dim eigenpairs");
    for (const StateVector& v : eigenvectors_)
        if (v.dim() != dim) throw DimMismatch(v.dim(), dim);

    // Pairwise orthonormality, and completeness sum_k |o_k><o_k| = 1.
    for (size_t j = 0; j < n; ++j) {
        for (size_t k = j; k < n; ++k) {
            const cdouble g = inner(eigenvectors_[j], eigenvectors_[k]);
            const double want = j == k ? 1.0 : 0.0;
            if (std::abs(g - want) > kNormTol)
                throw InvalidArgument("eigenvectors are not orthonormal");
        }
    }
    for (int r = 0; r < dim; ++r) {
        for (int c = 0; c < dim; ++c) {
            cdouble s = 0.0;
            for (size_t k = 0; k < n; ++k)
                s += eigenvectors_[k].amplitude(r) * std::conj(eigenvectors_[k].amplitude(c));
            const double want = r == c ? 1.0 : 0.0;
            if (std::abs(s - want) > kNormTol)
                throw InvalidArgument("eigenvectors do not resolve the identity");
        }
    }
}

std::vector<cdouble> SpectralObservable::apply(const StateVector& state) const {
    if (state.dim() != dim()) throw DimMismatch(state.dim(), dim());
    std::vector<cdouble> out(static_cast<size_t>(dim()), 0.0);
    for (size_t k = 0; k < eigenvalues_.size(); ++k) {
        const cdouble coeff = eigenvalues_[k] * inner(eigenvectors_[k], state);
        for (int i = 0; i < dim(); ++i)
            out[static_cast<size_t>(i)] += coeff * eigenvectors_[k].amplitude(i);
    }
    return out;
}

SpectralObservable SpectralObservable::diagonal(std::vector<double> eigenvalues) {
    const int dim = static_cast<int>(eigenvalues.size());
    std::vector<StateVector> vecs;
    vecs.reserve(eigenvalues.size());
    for (int k = 0; k < dim; ++k) vecs.push_back(StateVector::basis(dim, k));
    return SpectralObservable(std::move(eigenvalues), std::move(vecs));
}

SpectralObservable SpectralObservable::projector(int dim, int index) {
    if (index < 0 || index >= dim) throw InvalidArgument("projector index out of range");
    std::vector<double> ev(static_cast<size_t>(dim), 0.0);
    ev[static_cast<size_t>(index)] = 1.0;
    return diagonal(std::move(ev));
}

SpectralObservable SpectralObservable::identity(int dim) {
    return diagonal(std::vector<double>(static_cast<size_t>(dim), 1.0));
}

WeakValueResult weak_value(const StateVector& pre, const StateVector& post,
                           const SpectralObservable& obs) {
    if (pre.dim() != post.dim()) throw DimMismatch(pre.dim(), post.dim());
    if (pre.dim() != obs.dim()) throw DimMismatch(pre.dim(), obs.dim());
    const cdouble overlap = inner(post, pre);
    if (std::abs(overlap) <= kOverlapTol) throw DegenerateOverlap{};
    const std::vector<cdouble> opre = obs.apply(pre);
    cdouble num = 0.0;
    for (int i = 0; i < post.dim(); ++i)
        num += std::conj(post.amplitude(i)) * opre[static_cast<size_t>(i)];
    const cdouble value = num / overlap;
    return WeakValueResult{value, overlap, value.real(), value.imag()};
}

std::vector<cdouble> projector_weak_values(const StateVector& pre, const StateVector& post) {
    if (pre.dim() != post.dim()) throw DimMismatch(pre.dim(), post.dim());
    const cdouble overlap = inner(post, pre);
    if (std::abs(overlap) <= kOverlapTol) throw DegenerateOverlap{};
    std::vector<cdouble> out(static_cast<size_t>(pre.dim()));
    for (int k = 0; k < pre.dim(); ++k)
        out[static_cast<size_t>(k)] = std::conj(post.amplitude(k)) * pre.amplitude(k) / overlap;
    return out;
}

double expectation(const StateVector& state, const SpectralObservable& obs) {
    if (state.dim() != obs.dim()) throw DimMismatch(state.dim(), obs.dim());
    double s = 0.0;
    for (size_t k = 0; k < obs.eigenvalues().size(); ++k)
        s += obs.eigenvalues()[k] * std::norm(inner(obs.eigenvectors()[k], state));
    return s;
}

}  // namespace wv
