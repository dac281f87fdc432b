#ifndef WV_NUMFMT_HPP
#define WV_NUMFMT_HPP

#include <complex>
#include <string>

namespace wv {

/// Shortest decimal string that round-trips to the same double.
std::string format_double(double x);

/// Complex number as "a+bi" / "a-bi" with shortest round-trip parts.
std::string format_complex(std::complex<double> z);

}  // namespace wv

#endif  // WV_NUMFMT_HPP
