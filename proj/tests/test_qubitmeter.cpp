#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "test_util.hpp"
#include "wv/qubitmeter.hpp"

using namespace wv;
using doctest::Approx;

TEST_CASE("meter preparation from strength") {
    const MeterQubit sharp = meter_from_strength(1.0);
    CHECK(sharp.gamma() == Approx(1.0).epsilon(1e-14));
    CHECK(sharp.gamma_bar() == Approx(0.0));
    CHECK(sharp.strength() == Approx(1.0).epsilon(1e-14));

    const MeterQubit off = meter_from_strength(0.0);
    CHECK(off.gamma() == Approx(1.0 / std::sqrt(2.0)).epsilon(1e-14));
    CHECK(off.gamma_bar() == Approx(1.0 / std::sqrt(2.0)).epsilon(1e-14));
    CHECK(off.strength() == Approx(0.0));

    const MeterQubit weak = meter_from_strength(0.001);
    CHECK(weak.gamma() == Approx(0.7074568).epsilon(1e-7));
    CHECK(weak.gamma_bar() == Approx(0.7067496).epsilon(1e-7));
    CHECK(weak.strength() == Approx(0.001).epsilon(1e-12));

    CHECK_THROWS_AS(meter_from_strength(-0.1), StrengthOutOfRange);
    CHECK_THROWS_AS(meter_from_strength(1.1), StrengthOutOfRange);
}

TEST_CASE("raw meter construction validates the invariants") {
    CHECK_NOTHROW(MeterQubit(1.0, 0.0));
    CHECK_NOTHROW(MeterQubit(std::sqrt(0.5005), std::sqrt(0.4995)));
    CHECK_THROWS_AS(MeterQubit(0.5, 0.5), InvalidArgument);       // not normalized
    CHECK_THROWS_AS(MeterQubit(0.6, 0.8), InvalidArgument);       // gamma < gamma_bar
    CHECK_THROWS_AS(MeterQubit(1.2, -0.66332495807108), InvalidArgument);
}

TEST_CASE("CNOT coupling") {
    const MeterQubit meter = meter_from_strength(0.2);
    const JointState j0 = couple_cnot(StateVector::basis(2, 0), meter);
    CHECK(std::abs(j0.amplitude(0, 0) - cdouble{meter.gamma(), 0.0}) < 1e-15);
    CHECK(std::abs(j0.amplitude(0, 1) - cdouble{meter.gamma_bar(), 0.0}) < 1e-15);
    CHECK(std::abs(j0.amplitude(1, 0)) == 0.0);
    CHECK(std::abs(j0.amplitude(1, 1)) == 0.0);

    const JointState j1 = couple_cnot(StateVector::basis(2, 1), meter_from_strength(1.0));
    CHECK(std::abs(j1.amplitude(1, 1) - cdouble{1.0, 0.0}) < 1e-15);
    CHECK(std::abs(j1.amplitude(1, 0)) == 0.0);

    const MeterQubit weak = meter_from_strength(0.001);
    const JointState jw = couple_cnot(make_state({1.0, 1.0}), weak);
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    CHECK(jw.amplitude(0, 0).real() == Approx(weak.gamma() * inv_sqrt2).epsilon(1e-14));
    CHECK(jw.amplitude(0, 0).real() == Approx(0.5002500).epsilon(1e-6));
    CHECK(jw.amplitude(0, 1).real() == Approx(weak.gamma_bar() * inv_sqrt2).epsilon(1e-14));
    CHECK(jw.amplitude(1, 0).real() == Approx(weak.gamma_bar() * inv_sqrt2).epsilon(1e-14));
    CHECK(jw.amplitude(1, 1).real() == Approx(weak.gamma() * inv_sqrt2).epsilon(1e-14));

    CHECK_THROWS_AS(couple_cnot(make_state({1.0, 1.0, 1.0}), meter), DimMismatch);
}

TEST_CASE("post-selected meter statistics on the canonical instance") {
    const StateVector pre = wvtest::canonical_pre();
    const StateVector post = wvtest::canonical_post();

    SUBCASE("projective limit") {
        const MeterProbs p = postselect_meter_probs(couple_cnot(pre, meter_from_strength(1.0)), post);
        CHECK(p.prob_phi == Approx(0.5).epsilon(1e-13));
        CHECK(p.prob_1_given_phi == Approx(0.2).epsilon(1e-13));
    }

    SUBCASE("zero coupling leaves the meter uncorrelated") {
        const MeterProbs p = postselect_meter_probs(couple_cnot(pre, meter_from_strength(0.0)), post);
        CHECK(p.prob_1_given_phi == Approx(0.5).epsilon(1e-13));
        CHECK(p.prob_phi == Approx(0.1).epsilon(1e-13));
    }

    SUBCASE("weak coupling") {
        const MeterProbs p =
            postselect_meter_probs(couple_cnot(pre, meter_from_strength(0.001)), post);
        CHECK(p.prob_1_given_phi == Approx(0.4985000).epsilon(1e-6));
    }
}

TEST_CASE("impossible post-selection") {
    // Post-select |1> against a pure-|0> signal with a sharp meter: the
    // joint state has no overlap with the selection.
    const JointState j = couple_cnot(StateVector::basis(2, 0), meter_from_strength(1.0));
    CHECK_THROWS_AS(postselect_meter_probs(j, StateVector::basis(2, 1)), ImpossiblePostselection);
}

TEST_CASE("normalized readout") {
    const StateVector pre = wvtest::canonical_pre();
    const StateVector post = wvtest::canonical_post();

    const MeterQubit weak = meter_from_strength(0.001);
    const MeterProbs p = postselect_meter_probs(couple_cnot(pre, weak), post);
    const double r = normalized_readout(p.prob_1_given_phi, weak);
    CHECK(r == Approx(-1.0).epsilon(1e-2));

    const MeterQubit sharp = meter_from_strength(1.0);
    const MeterProbs ps = postselect_meter_probs(couple_cnot(pre, sharp), post);
    CHECK(normalized_readout(ps.prob_1_given_phi, sharp) == Approx(0.2).epsilon(1e-12));

    CHECK(normalized_readout(weak.gamma_bar() * weak.gamma_bar(), weak) == Approx(0.0));

    CHECK_THROWS_AS(normalized_readout(0.5, meter_from_strength(0.0)), ZeroStrength);
}

TEST_CASE("weak limit converges linearly to the real weak value") {
    const StateVector pre = wvtest::canonical_pre();
    const StateVector post = wvtest::canonical_post();
    const double re_wv = -1.0;

    double bound = 0.0;
    for (double g : {1e-2, 1e-3, 1e-4}) {
        const MeterQubit meter = meter_from_strength(g);
        const MeterProbs p = postselect_meter_probs(couple_cnot(pre, meter), post);
        const double err = std::abs(normalized_readout(p.prob_1_given_phi, meter) - re_wv);
        const double k = err / g;
        if (bound == 0.0) bound = 2.0 * k + 1.0;
        CHECK(k < bound);
    }
}

TEST_CASE("projective limit matches the two-branch conditional probability") {
    RandomStream rng(17);
    for (int it = 0; it < 50; ++it) {
        const auto [pre, post] = wvtest::random_selection(2, rng);
        const MeterQubit sharp = meter_from_strength(1.0);
        const MeterProbs p = postselect_meter_probs(couple_cnot(pre, sharp), post);
        const double w0 = std::norm(std::conj(post.amplitude(0)) * pre.amplitude(0));
        const double w1 = std::norm(std::conj(post.amplitude(1)) * pre.amplitude(1));
        CHECK(p.prob_1_given_phi == Approx(w1 / (w0 + w1)).epsilon(1e-12));
    }
}

TEST_CASE("marginal consistency and normalization") {
    RandomStream rng(18);
    for (int it = 0; it < 50; ++it) {
        const auto [pre, post] = wvtest::random_selection(2, rng);
        const MeterProbs at_zero =
            postselect_meter_probs(couple_cnot(pre, meter_from_strength(0.0)), post);
        CHECK(at_zero.prob_phi == Approx(std::norm(inner(post, pre))).epsilon(1e-12));

        const double g = rng.next_unit();
        const MeterProbs p = postselect_meter_probs(couple_cnot(pre, meter_from_strength(g)), post);
        CHECK(p.prob_phi <= 1.0 + 1e-12);
    }
}
