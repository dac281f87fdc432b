#ifndef WV_BACKACTION_HPP
#define WV_BACKACTION_HPP

#include <map>
#include <vector>

#include "wv/qstate.hpp"

namespace wv {

/// Couplings above this are outside the weak regime the first-order
/// formulas assume; output is still produced but flagged.
inline constexpr double kWeakConditionMax = 0.1;

/// A scalar multiplier C attached to one path amplitude: a phase shifter
/// C = exp(-i theta), an attenuator C = exp(-alpha) = sqrt(T), or a general
/// nonzero c-number (their product, or gain when |C| > 1).
class PathComponent {
public:
    enum class Kind { Phase, Attenuator, General };

    static PathComponent phase(int path_index, double theta);
    static PathComponent attenuator(int path_index, double alpha);
    static PathComponent general(int path_index, cdouble c);

    int path_index() const { return path_; }
    Kind kind() const { return kind_; }
    double theta() const { return theta_; }
    double alpha() const { return alpha_; }
    cdouble c() const { return c_; }

    /// Transmittance T = |C|^2 and loss R = 1 - T of the attenuator view.
    double transmittance() const;
    double reflectance_loss() const { return 1.0 - transmittance(); }
    /// Gain components (|C| > 1) are algebraically fine but unphysical.
    bool nonphysical() const;

    /// Same-path composition by multiplication of the c-numbers; the kind
    /// survives only when both factors share it.
    friend PathComponent compose(const PathComponent& a, const PathComponent& b);

private:
    PathComponent(int path, Kind kind, double theta, double alpha, cdouble c)
        : path_(path), kind_(kind), theta_(theta), alpha_(alpha), c_(c) {}

    int path_;
    Kind kind_;
    double theta_;
    double alpha_;
    cdouble c_;
};

/// At most one effective component per path; stacking composes
/// multiplicatively. Paths without an entry carry C = 1.
class ComponentSet {
public:
    ComponentSet() = default;

    void add(const PathComponent& component);

    bool empty() const { return by_path_.empty(); }
    size_t size() const { return by_path_.size(); }
    /// Effective multiplier on a path (1 when no component sits there).
    cdouble multiplier(int path_index) const;
    int max_path() const;
    /// All components satisfy |theta|, |alpha| <= 0.1.
    bool weak_condition() const;

    std::vector<PathComponent> components() const;

    auto begin() const { return by_path_.begin(); }
    auto end() const { return by_path_.end(); }

private:
    std::map<int, PathComponent> by_path_;
};

struct ProbabilityReport {
    double exact;          ///< baseline * |sum_k C_k wv_k|^2
    double first_order;    ///< baseline * (1 + sum_k (2 theta_k Im wv_k - 2 alpha_k Re wv_k))
    double baseline;       ///< |<post|pre>|^2
    std::vector<cdouble> weak_values_used;
    bool weak_condition;   ///< false when some coupling exceeds 0.1
};

/// Post-selection probability with the components in place, computed from
/// the per-path weak values and cross-checked internally against the
/// diagonal-operator route |<post| diag(C) |pre>|^2.
ProbabilityReport exact_postselection_prob(const StateVector& pre, const StateVector& post,
                                           const ComponentSet& components);

/// |<post| exp(-i theta O) |pre>|^2 with theta treated as a plain parameter.
double unitary_kick_prob(const StateVector& pre, const StateVector& post,
                         const SpectralObservable& obs, double theta);

/// First-order (weak-regime) post-selection probability.
double first_order_prob(const StateVector& pre, const StateVector& post,
                        const ComponentSet& components);

/// Infer Re of a path weak value from the probability drop under an
/// attenuator: (1/2alpha)(1 - prob_with/prob_baseline).
double estimate_re_weak_value(double prob_with, double prob_baseline, double alpha);

/// Infer Im of a path weak value from the probability change under a phase
/// shifter: (1/2theta)(prob_with/prob_baseline - 1).
double estimate_im_weak_value(double prob_with, double prob_baseline, double theta);

}  // namespace wv

#endif  // WV_BACKACTION_HPP
