#ifndef WV_QSTATE_HPP
#define WV_QSTATE_HPP

#include <complex>
#include <string>
#include <vector>

#include "wv/errors.hpp"

namespace wv {

using cdouble = std::complex<double>;

/// Validation tolerance for construction-time invariants.
inline constexpr double kNormTol = 1e-9;
/// Below this modulus an overlap <phi|psi> counts as degenerate and weak
/// values are an error rather than a huge number.
inline constexpr double kOverlapTol = 1e-9;

/// Normalized complex amplitude vector over a finite computational (path)
/// basis. Immutable after construction; downstream code assumes unit norm.
class StateVector {
public:
    explicit StateVector(std::vector<cdouble> raw_amplitudes);
    StateVector(std::vector<cdouble> raw_amplitudes, std::vector<std::string> labels);

    int dim() const { return static_cast<int>(amp_.size()); }
    const std::vector<cdouble>& amplitudes() const { return amp_; }
    cdouble amplitude(int i) const { return amp_[static_cast<size_t>(i)]; }
    /// Basis labels are cosmetic; empty when none were given.
    const std::vector<std::string>& labels() const { return labels_; }

    /// Computational basis vector |index> of the given dimension.
    static StateVector basis(int dim, int index);

private:
    std::vector<cdouble> amp_;
    std::vector<std::string> labels_;
};

/// Observable in spectral form: eigenvalue/eigenvector pairs, validated
/// orthonormal and complete at construction. No eigensolver lives here;
/// callers supply spectra they already know.
class SpectralObservable {
public:
    SpectralObservable(std::vector<double> eigenvalues, std::vector<StateVector> eigenvectors);

    int dim() const { return static_cast<int>(eigenvalues_.size()); }
    const std::vector<double>& eigenvalues() const { return eigenvalues_; }
    const std::vector<StateVector>& eigenvectors() const { return eigenvectors_; }

    /// O|state>: generally unnormalized amplitudes.
    std::vector<cdouble> apply(const StateVector& state) const;

    /// Diagonal observable on the computational basis.
    static SpectralObservable diagonal(std::vector<double> eigenvalues);
    /// Projector |index><index| on the computational basis.
    static SpectralObservable projector(int dim, int index);
    static SpectralObservable identity(int dim);

private:
    std::vector<double> eigenvalues_;
    std::vector<StateVector> eigenvectors_;
};

struct WeakValueResult {
    cdouble value;    ///< <phi|O|psi> / <phi|psi>
    cdouble overlap;  ///< <phi|psi>
    double re;
    double im;
};

/// Normalize raw amplitudes into a state. Throws ZeroVector when every
/// modulus is <= 1e-12.
StateVector make_state(std::vector<cdouble> raw_amplitudes);

/// <bra|ket> = sum_i conj(bra_i) ket_i.
cdouble inner(const StateVector& bra, const StateVector& ket);

/// Kronecker product; amplitude at (i*dim_b + j) is a_i * b_j.
StateVector tensor(const StateVector& a, const StateVector& b);

/// Weak value of obs between pre- and post-selection. Throws
/// DegenerateOverlap when |<phi|psi>| <= 1e-9.
WeakValueResult weak_value(const StateVector& pre, const StateVector& post,
                           const SpectralObservable& obs);

/// Weak values of every computational-basis projector |k><k|; entry k is
/// conj(post_k) * pre_k / <post|pre>. They sum to 1.
std::vector<cdouble> projector_weak_values(const StateVector& pre, const StateVector& post);

/// Ensemble average <state|O|state>.
double expectation(const StateVector& state, const SpectralObservable& obs);

}  // namespace wv

#endif  // WV_QSTATE_HPP
