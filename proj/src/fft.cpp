#include "wv/fft.hpp"

#include <numbers>

namespace wv::fft {

bool is_power_of_two(size_t n) { return n > 0 && (n & (n - 1)) == 0; }

namespace {

// Iterative Cooley-Tukey; sign = -1 forward, +1 inverse.
void transform(std::vector<std::complex<double>>& a, double sign) {
    const size_t n = a.size();
    if (n < 2) return;

    for (size_t i = 1, j = 0; i < n; ++i) {
        size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(a[i], a[j]);
    }

    for (size_t len = 2; len <= n; len <<= 1) {
        const double ang = sign * 2.0 * std::numbers::pi / static_cast<double>(len);
        const std::complex<double> wlen{std::cos(ang), std::sin(ang)};
        for (size_t i = 0; i < n; i += len) {
            std::complex<double> w{1.0, 0.0};
            for (size_t j = 0; j < len / 2; ++j) {
                const std::complex<double> u = a[i + j];
                const std::complex<double> v = a[i + j + len / 2] * w;
                a[i + j] = u + v;
                a[i + j + len / 2] = u - v;
                w *= wlen;
            }
        }
    }
}

}  // namespace

void forward(std::vector<std::complex<double>>& a) { transform(a, -1.0); }

void inverse(std::vector<std::complex<double>>& a) {
    transform(a, +1.0);
    const double inv = 1.0 / static_cast<double>(a.size());
    for (auto& x : a) x *= inv;
}

int signed_index(size_t m, size_t n) {
    return m < n / 2 ? static_cast<int>(m) : static_cast<int>(m) - static_cast<int>(n);
}

double angular_frequency(size_t m, size_t n, double length) {
    return 2.0 * std::numbers::pi * static_cast<double>(signed_index(m, n)) / length;
}

}  // namespace wv::fft
