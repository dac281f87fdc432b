#ifndef WV_ERRORS_HPP
#define WV_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace wv {

/// Base class for all domain errors thrown by this library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// qstate
struct ZeroVector : Error {
    ZeroVector() : Error("all amplitudes have modulus <= 1e-12") {}
};
struct DimMismatch : Error {
    DimMismatch(int a, int b)
        : Error("dimension mismatch: " + std::to_string(a) + " vs " + std::to_string(b)) {}
};
struct DegenerateOverlap : Error {
    DegenerateOverlap() : Error("degenerate overlap: |<phi|psi>| <= 1e-9, weak value undefined") {}
};

// backaction
struct PathOutOfRange : Error {
    PathOutOfRange(int path, int dim)
        : Error("path index " + std::to_string(path) + " out of range for dim " + std::to_string(dim)) {}
};
struct NonpositiveAlpha : Error {
    NonpositiveAlpha() : Error("attenuation exponent alpha must be > 0") {}
};
struct ZeroTheta : Error {
    ZeroTheta() : Error("phase theta must be nonzero") {}
};
struct ZeroBaseline : Error {
    ZeroBaseline() : Error("baseline probability must be > 0") {}
};

// pointer
struct BadGrid : Error {
    explicit BadGrid(const std::string& why) : Error("bad pointer grid: " + why) {}
};
struct GridOverflow : Error {
    explicit GridOverflow(const std::string& why) : Error("grid overflow: " + why) {}
};

// qubitmeter
struct StrengthOutOfRange : Error {
    StrengthOutOfRange() : Error("meter strength must lie in [0, 1]") {}
};
struct ZeroStrength : Error {
    ZeroStrength() : Error("zero measurement strength: normalized readout undefined") {}
};
struct ImpossiblePostselection : Error {
    ImpossiblePostselection() : Error("post-selection probability vanishes") {}
};

// shotnoise
struct NegativeMean : Error {
    NegativeMean() : Error("Poisson mean must be finite and >= 0") {}
};
struct DegenerateBaseline : Error {
    DegenerateBaseline() : Error("baseline post-selection probability vanishes") {}
};

/// Generic constructor-argument violation not covered by a named error.
struct InvalidArgument : Error {
    explicit InvalidArgument(const std::string& why) : Error(why) {}
};

}  // namespace wv

#endif  // WV_ERRORS_HPP
