#include "wv/qubitmeter.hpp"

#include <cmath>

namespace wv {

MeterQubit::MeterQubit(double gamma, double gamma_bar) : gamma_(gamma), gamma_bar_(gamma_bar) {
    if (!(gamma >= gamma_bar) || !(gamma_bar >= 0.0))
        throw InvalidArgument("meter requires gamma >= gamma_bar >= 0");
    if (std::abs(gamma * gamma + gamma_bar * gamma_bar - 1.0) > 1e-12)
        throw InvalidArgument("meter amplitudes must satisfy gamma^2 + gamma_bar^2 = 1");
}

MeterQubit meter_from_strength(double g) {
    if (!(g >= 0.0) || !(g <= 1.0)) throw StrengthOutOfRange{};
    return MeterQubit(std::sqrt((1.0 + g) / 2.0), std::sqrt((1.0 - g) / 2.0));
}

JointState couple_cnot(const StateVector& signal, const MeterQubit& meter) {
    if (signal.dim() != 2) throw DimMismatch(signal.dim(), 2);
    const cdouble a = signal.amplitude(0);
    const cdouble b = signal.amplitude(1);
    return JointState(StateVector({a * meter.gamma(), a * meter.gamma_bar(),
                                   b * meter.gamma_bar(), b * meter.gamma()}));
}

MeterProbs postselect_meter_probs(const JointState& joint, const StateVector& post) {
    if (post.dim() != 2) throw DimMismatch(post.dim(), 2);
    // <post| applied to the meter-|0> and meter-|1> branches of the signal.
    const cdouble c0 = std::conj(post.amplitude(0)) * joint.amplitude(0, 0) +
                       std::conj(post.amplitude(1)) * joint.amplitude(1, 0);
    const cdouble c1 = std::conj(post.amplitude(0)) * joint.amplitude(0, 1) +
                       std::conj(post.amplitude(1)) * joint.amplitude(1, 1);
    const double prob_phi = std::norm(c0) + std::norm(c1);
    if (!(prob_phi > 1e-18)) throw ImpossiblePostselection{};
    return MeterProbs{prob_phi, std::norm(c1) / prob_phi};
}

double normalized_readout(double prob_1_given_phi, const MeterQubit& meter) {
    const double g = meter.strength();
    if (!(g > 0.0)) throw ZeroStrength{};
    return (prob_1_given_phi - meter.gamma_bar() * meter.gamma_bar()) / g;
}

}  // namespace wv
