#include "wv/numfmt.hpp"

#include <charconv>

namespace wv {

std::string format_double(double x) {
    char buf[40];
    auto res = std::to_chars(buf, buf + sizeof(buf), x);
    return std::string(buf, res.ptr);
}

std::string format_complex(std::complex<double> z) {
    std::string s = format_double(z.real());
    double im = z.imag();
    if (im >= 0.0 || im != im) s += '+';
    s += format_double(im);
    s += 'i';
    return s;
}

}  // namespace wv
