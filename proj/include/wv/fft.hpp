#ifndef WV_FFT_HPP
#define WV_FFT_HPP

#include <complex>
#include <vector>

namespace wv::fft {

bool is_power_of_two(size_t n);

/// In-place radix-2 forward transform, X_m = sum_j x_j exp(-2 pi i j m / n).
/// Size must be a power of two.
void forward(std::vector<std::complex<double>>& a);

/// In-place inverse transform including the 1/n factor.
void inverse(std::vector<std::complex<double>>& a);

/// Signed frequency index for bin m of an n-point transform:
/// 0, 1, ..., n/2-1, -n/2, ..., -1.
int signed_index(size_t m, size_t n);

/// Angular frequency 2 pi f_m / length of bin m on a periodic grid.
double angular_frequency(size_t m, size_t n, double length);

}  // namespace wv::fft

#endif  // WV_FFT_HPP
