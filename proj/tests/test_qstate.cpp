#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "test_util.hpp"
#include "wv/qstate.hpp"

using namespace wv;
using doctest::Approx;

namespace {
const double kSqrt2 = std::sqrt(2.0);
const double kSqrt5 = std::sqrt(5.0);
}  // namespace

TEST_CASE("make_state normalizes raw amplitudes") {
    const StateVector s = make_state({2.0, -1.0});
    CHECK(s.dim() == 2);
    CHECK(s.amplitude(0).real() == Approx(0.894427190999916).epsilon(1e-12));
    CHECK(s.amplitude(1).real() == Approx(-0.447213595499958).epsilon(1e-12));
    CHECK(s.amplitude(0).imag() == 0.0);

    const StateVector zero = make_state({1.0, 0.0});
    CHECK(zero.amplitude(0) == cdouble{1.0, 0.0});
    CHECK(zero.amplitude(1) == cdouble{0.0, 0.0});

    CHECK_THROWS_AS(make_state({0.0, 0.0}), ZeroVector);
    CHECK_THROWS_AS(make_state({1e-13, cdouble{0.0, 5e-13}}), ZeroVector);
}

TEST_CASE("inner products") {
    const StateVector zero = StateVector::basis(2, 0);
    CHECK(inner(zero, zero) == cdouble{1.0, 0.0});

    const StateVector bra = make_state({2.0, -1.0});
    const StateVector ket = make_state({1.0, 1.0});
    CHECK(inner(bra, ket).real() == Approx(1.0 / std::sqrt(10.0)).epsilon(1e-12));
    CHECK(inner(bra, ket).imag() == Approx(0.0));

    const StateVector bra2 = make_state({cdouble{1.0, 0.0}, cdouble{0.0, -1.0}});
    const cdouble v = inner(bra2, ket);
    CHECK(v.real() == Approx(0.5).epsilon(1e-12));
    CHECK(v.imag() == Approx(0.5).epsilon(1e-12));
    const cdouble swapped = inner(ket, bra2);
    CHECK(swapped.real() == Approx(v.real()).epsilon(1e-12));
    CHECK(swapped.imag() == Approx(-v.imag()).epsilon(1e-12));

    CHECK_THROWS_AS(inner(zero, StateVector::basis(3, 0)), DimMismatch);
}

TEST_CASE("tensor products") {
    const StateVector b0 = StateVector::basis(2, 0);
    const StateVector b1 = StateVector::basis(2, 1);
    const StateVector t = tensor(b0, b1);
    CHECK(t.dim() == 4);
    CHECK(t.amplitude(1) == cdouble{1.0, 0.0});
    CHECK(t.amplitude(0) == cdouble{0.0, 0.0});

    const StateVector plus = make_state({1.0, 1.0});
    const StateVector t2 = tensor(plus, b0);
    CHECK(t2.amplitude(0).real() == Approx(1.0 / kSqrt2).epsilon(1e-12));
    CHECK(t2.amplitude(1) == cdouble{0.0, 0.0});
    CHECK(t2.amplitude(2).real() == Approx(1.0 / kSqrt2).epsilon(1e-12));

    const StateVector minus = make_state({1.0, -1.0});
    const StateVector t3 = tensor(plus, minus);
    CHECK(t3.amplitude(0).real() == Approx(0.5).epsilon(1e-12));
    CHECK(t3.amplitude(1).real() == Approx(-0.5).epsilon(1e-12));
    CHECK(t3.amplitude(2).real() == Approx(0.5).epsilon(1e-12));
    CHECK(t3.amplitude(3).real() == Approx(-0.5).epsilon(1e-12));
}

TEST_CASE("spectral observables validate their spectra") {
    CHECK_NOTHROW(SpectralObservable::diagonal({1.0, -1.0}));
    CHECK_NOTHROW(SpectralObservable::projector(2, 1));

    // Not orthonormal.
    CHECK_THROWS_AS(SpectralObservable({1.0, 0.0},
                                       {make_state({1.0, 1.0}), make_state({1.0, 0.5})}),
                    InvalidArgument);
    // Too few eigenpairs to span.
    CHECK_THROWS_AS(SpectralObservable({1.0}, {make_state({1.0, 0.0})}), InvalidArgument);

    // A rotated basis is fine.
    const StateVector plus = make_state({1.0, 1.0});
    const StateVector minus = make_state({1.0, -1.0});
    CHECK_NOTHROW(SpectralObservable({1.0, -1.0}, {plus, minus}));
}

TEST_CASE("weak values of the canonical instance") {
    const StateVector pre = wvtest::canonical_pre();
    const StateVector post = wvtest::canonical_post();

    const WeakValueResult wv1 = weak_value(pre, post, SpectralObservable::projector(2, 1));
    CHECK(wv1.re == Approx(-1.0).epsilon(1e-13));
    CHECK(wv1.im == Approx(0.0));
    CHECK(wv1.value == cdouble{wv1.re, wv1.im});
    CHECK(std::abs(wv1.overlap - cdouble{1.0 / std::sqrt(10.0), 0.0}) < 1e-12);

    const WeakValueResult wv0 = weak_value(pre, post, SpectralObservable::projector(2, 0));
    CHECK(wv0.re == Approx(2.0).epsilon(1e-13));
    CHECK(wv0.im == Approx(0.0));
}

TEST_CASE("weak value reduces to eigen/expectation in trivial selections") {
    const StateVector zero = StateVector::basis(2, 0);
    const WeakValueResult wv = weak_value(zero, zero, SpectralObservable::projector(2, 0));
    CHECK(wv.re == Approx(1.0));
    CHECK(wv.im == Approx(0.0));
}

TEST_CASE("complex weak value example") {
    const StateVector pre = make_state({1.0, 1.0});
    const StateVector post = make_state({cdouble{1.0, 0.0}, cdouble{0.0, 1.0}});
    const WeakValueResult wv = weak_value(pre, post, SpectralObservable::projector(2, 1));
    CHECK(wv.re == Approx(0.5).epsilon(1e-12));
    CHECK(wv.im == Approx(-0.5).epsilon(1e-12));
}

TEST_CASE("degenerate overlap is an error, not infinity") {
    const StateVector pre = StateVector::basis(2, 0);
    const StateVector post = StateVector::basis(2, 1);
    CHECK_THROWS_AS(weak_value(pre, post, SpectralObservable::projector(2, 0)),
                    DegenerateOverlap);
    CHECK_THROWS_AS(projector_weak_values(pre, post), DegenerateOverlap);
}

TEST_CASE("projector weak values") {
    const auto wv = projector_weak_values(wvtest::canonical_pre(), wvtest::canonical_post());
    REQUIRE(wv.size() == 2);
    CHECK(wv[0].real() == Approx(2.0).epsilon(1e-13));
    CHECK(wv[1].real() == Approx(-1.0).epsilon(1e-13));

    const StateVector post = make_state({cdouble{1.0, 0.0}, cdouble{0.0, 1.0}});
    const auto wvc = projector_weak_values(make_state({1.0, 1.0}), post);
    CHECK(wvc[0].real() == Approx(0.5).epsilon(1e-12));
    CHECK(wvc[0].imag() == Approx(0.5).epsilon(1e-12));
    CHECK(wvc[1].real() == Approx(0.5).epsilon(1e-12));
    CHECK(wvc[1].imag() == Approx(-0.5).epsilon(1e-12));

    const StateVector plus = make_state({1.0, 1.0});
    const auto born = projector_weak_values(plus, plus);
    CHECK(born[0].real() == Approx(0.5).epsilon(1e-13));
    CHECK(born[1].real() == Approx(0.5).epsilon(1e-13));
}

TEST_CASE("expectation values") {
    const StateVector plus = make_state({1.0, 1.0});
    CHECK(expectation(plus, SpectralObservable::diagonal({1.0, -1.0})) == Approx(0.0));
    CHECK(expectation(plus, SpectralObservable::projector(2, 1)) == Approx(0.5).epsilon(1e-13));
    CHECK(expectation(make_state({2.0, -1.0}), SpectralObservable::projector(2, 0)) ==
          Approx(0.8).epsilon(1e-13));
}

TEST_CASE("sum rule, consistency and conjugate symmetry over random instances") {
    RandomStream rng(41);
    for (int it = 0; it < 200; ++it) {
        const int dim = 2 + static_cast<int>(rng.next_u64() % 7);
        const auto [pre, post] = wvtest::random_selection(dim, rng, 1e-6);

        const auto wv = projector_weak_values(pre, post);
        cdouble sum = 0.0;
        for (const cdouble& w : wv) sum += w;
        CHECK(std::abs(sum - cdouble{1.0, 0.0}) < 1e-12);

        const int k = static_cast<int>(rng.next_u64() % static_cast<uint64_t>(dim));
        const WeakValueResult via_obs = weak_value(pre, post, SpectralObservable::projector(dim, k));
        CHECK(std::abs(via_obs.value - wv[static_cast<size_t>(k)]) < 1e-12);

        const cdouble ab = inner(pre, post);
        const cdouble ba = inner(post, pre);
        CHECK(std::abs(ab - std::conj(ba)) < 1e-12);
    }
}

TEST_CASE("weak value linearity in the eigenvalues") {
    RandomStream rng(42);
    for (int it = 0; it < 50; ++it) {
        const int dim = 2 + static_cast<int>(rng.next_u64() % 5);
        const auto [pre, post] = wvtest::random_selection(dim, rng);
        std::vector<double> evs(static_cast<size_t>(dim));
        for (auto& e : evs) e = 4.0 * rng.next_unit() - 2.0;
        const double a = 3.0 * rng.next_unit() - 1.5;
        const double b = 2.0 * rng.next_unit() - 1.0;
        std::vector<double> scaled(evs);
        for (auto& e : scaled) e = a * e + b;

        const cdouble w = weak_value(pre, post, SpectralObservable::diagonal(evs)).value;
        const cdouble ws = weak_value(pre, post, SpectralObservable::diagonal(scaled)).value;
        CHECK(std::abs(ws - (a * w + b)) < 1e-12);
    }
}

TEST_CASE("pre = post reduces the weak value to the expectation value") {
    RandomStream rng(43);
    for (int it = 0; it < 50; ++it) {
        const int dim = 2 + static_cast<int>(rng.next_u64() % 5);
        const StateVector psi = wvtest::random_state(dim, rng);
        std::vector<double> evs(static_cast<size_t>(dim));
        for (auto& e : evs) e = 2.0 * rng.next_unit() - 1.0;
        const SpectralObservable obs = SpectralObservable::diagonal(evs);
        const WeakValueResult wv = weak_value(psi, psi, obs);
        CHECK(std::abs(wv.im) < 1e-12);
        CHECK(wv.re == Approx(expectation(psi, obs)).epsilon(1e-11));
    }
}

TEST_CASE("joint weak values on a composite basis") {
    // Joint projector |kl><kl| on a 2x2 composite system equals the product
    // of the marginal amplitudes in the tensor states.
    const StateVector pre = tensor(make_state({1.0, 1.0}), make_state({1.0, 2.0}));
    const StateVector post = tensor(make_state({2.0, -1.0}), make_state({1.0, -1.0}));
    const auto wv = projector_weak_values(pre, post);
    cdouble sum = 0.0;
    for (const auto& w : wv) sum += w;
    CHECK(std::abs(sum - cdouble{1.0, 0.0}) < 1e-12);

    const WeakValueResult joint = weak_value(pre, post, SpectralObservable::projector(4, 3));
    CHECK(std::abs(joint.value - wv[3]) < 1e-12);
}

TEST_CASE("labels are cosmetic and length-checked") {
    const StateVector s({1.0, 1.0}, {"upper", "lower"});
    CHECK(s.labels()[0] == "upper");
    CHECK_THROWS_AS(StateVector({1.0, 1.0}, {"only-one"}), InvalidArgument);
}
