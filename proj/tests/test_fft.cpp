#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "wv/fft.hpp"
#include "wv/shotnoise.hpp"

using namespace wv;
using doctest::Approx;

namespace {

// O(n^2) reference transform.
std::vector<cdouble> naive_dft(const std::vector<cdouble>& x) {
    const size_t n = x.size();
    std::vector<cdouble> out(n, 0.0);
    for (size_t m = 0; m < n; ++m)
        for (size_t j = 0; j < n; ++j)
            out[m] += x[j] * std::polar(1.0, -2.0 * std::numbers::pi *
                                                 static_cast<double>(j * m % n) / n);
    return out;
}

}  // namespace

TEST_CASE("power-of-two check") {
    CHECK(fft::is_power_of_two(256));
    CHECK(fft::is_power_of_two(4096));
    CHECK_FALSE(fft::is_power_of_two(0));
    CHECK_FALSE(fft::is_power_of_two(1000));
}

TEST_CASE("forward transform matches the naive DFT") {
    RandomStream rng(11);
    for (size_t n : {size_t{8}, size_t{64}, size_t{256}}) {
        std::vector<cdouble> x(n);
        for (auto& v : x) v = {2.0 * rng.next_unit() - 1.0, 2.0 * rng.next_unit() - 1.0};
        const std::vector<cdouble> want = naive_dft(x);
        std::vector<cdouble> got = x;
        fft::forward(got);
        for (size_t m = 0; m < n; ++m) CHECK(std::abs(got[m] - want[m]) < 1e-10);
    }
}

TEST_CASE("inverse undoes forward") {
    RandomStream rng(12);
    std::vector<cdouble> x(1024);
    for (auto& v : x) v = {2.0 * rng.next_unit() - 1.0, 2.0 * rng.next_unit() - 1.0};
    std::vector<cdouble> y = x;
    fft::forward(y);
    fft::inverse(y);
    for (size_t j = 0; j < x.size(); ++j) CHECK(std::abs(y[j] - x[j]) < 1e-12);
}

TEST_CASE("signed frequency layout") {
    CHECK(fft::signed_index(0, 8) == 0);
    CHECK(fft::signed_index(3, 8) == 3);
    CHECK(fft::signed_index(4, 8) == -4);
    CHECK(fft::signed_index(7, 8) == -1);
    CHECK(fft::angular_frequency(1, 8, 2.0) == Approx(std::numbers::pi));
}

TEST_CASE("momentum-space phase displaces a sampled Gaussian") {
    // Shift by exactly one grid step and compare sample-for-sample.
    const size_t n = 512;
    const double length = 20.0;
    const double dq = length / static_cast<double>(n);
    std::vector<cdouble> x(n);
    for (size_t j = 0; j < n; ++j) {
        const double q = -10.0 + static_cast<double>(j) * dq;
        x[j] = std::exp(-q * q / 2.0);
    }
    std::vector<cdouble> shifted = x;
    fft::forward(shifted);
    for (size_t m = 0; m < n; ++m)
        shifted[m] *= std::polar(1.0, -fft::angular_frequency(m, n, length) * dq);
    fft::inverse(shifted);
    for (size_t j = 1; j < n; ++j) CHECK(std::abs(shifted[j] - x[j - 1]) < 1e-9);
}
