#ifndef WV_QUBITMETER_HPP
#define WV_QUBITMETER_HPP

#include "wv/qstate.hpp"

namespace wv {

/// Two-level meter prepared in gamma|0> + gamma_bar|1> with
/// gamma >= gamma_bar >= 0; strength G = gamma^2 - gamma_bar^2 runs from 0
/// (no measurement) to 1 (projective).
class MeterQubit {
public:
    MeterQubit(double gamma, double gamma_bar);

    double gamma() const { return gamma_; }
    double gamma_bar() const { return gamma_bar_; }
    double strength() const { return gamma_ * gamma_ - gamma_bar_ * gamma_bar_; }

private:
    double gamma_;
    double gamma_bar_;
};

/// Signal-meter state over the basis (00, 01, 10, 11); built by couple_cnot.
class JointState {
public:
    const StateVector& state() const { return state_; }
    cdouble amplitude(int signal, int meter) const { return state_.amplitude(signal * 2 + meter); }

private:
    explicit JointState(StateVector s) : state_(std::move(s)) {}
    StateVector state_;

    friend JointState couple_cnot(const StateVector&, const MeterQubit&);
};

struct MeterProbs {
    double prob_phi;          ///< post-selection success probability
    double prob_1_given_phi;  ///< meter |1> probability conditioned on success
};

/// Meter preparation from the strength G in [0, 1].
MeterQubit meter_from_strength(double g);

/// CNOT coupling of a dim-2 signal a|0> + b|1> to the meter:
/// (a gamma, a gamma_bar, b gamma_bar, b gamma) over (s,m) = (00,01,10,11).
JointState couple_cnot(const StateVector& signal, const MeterQubit& meter);

/// Project the signal of the joint state on `post` and read the meter.
MeterProbs postselect_meter_probs(const JointState& joint, const StateVector& post);

/// Normalized readout (Prob(1|phi) - gamma_bar^2) / G; tends to the real
/// part of the |1><1| weak value as G -> 0.
double normalized_readout(double prob_1_given_phi, const MeterQubit& meter);

}  // namespace wv

#endif  // WV_QUBITMETER_HPP
