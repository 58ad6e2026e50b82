#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace qde {

using Complex = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;

// Error taxonomy shared across the library. The kind string is what the CLI
// reports on stderr.
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& msg)
        : std::runtime_error(msg), kind_(std::move(kind)) {}
    const std::string& kind() const { return kind_; }

private:
    std::string kind_;
};

struct RangeError : Error {
    explicit RangeError(const std::string& m) : Error("range error", m) {}
};
struct ShapeError : Error {
    explicit ShapeError(const std::string& m) : Error("shape error", m) {}
};
struct DomainError : Error {
    explicit DomainError(const std::string& m) : Error("domain error", m) {}
};
struct DegenerateInputError : Error {
    explicit DegenerateInputError(const std::string& m) : Error("degenerate input", m) {}
};
struct FormatError : Error {
    explicit FormatError(const std::string& m) : Error("format error", m) {}
};
struct UnsupportedRegisterError : Error {
    explicit UnsupportedRegisterError(const std::string& m) : Error("unsupported register", m) {}
};
struct UnsupportedDepthError : Error {
    explicit UnsupportedDepthError(const std::string& m) : Error("unsupported depth", m) {}
};
struct UnsupportedLayoutError : Error {
    explicit UnsupportedLayoutError(const std::string& m) : Error("unsupported layout", m) {}
};
struct UnsupportedSignError : Error {
    explicit UnsupportedSignError(const std::string& m) : Error("unsupported sign", m) {}
};
struct GraphFormatError : Error {
    explicit GraphFormatError(const std::string& m) : Error("graph format error", m) {}
};
struct EmptyBranchError : Error {
    explicit EmptyBranchError(const std::string& m) : Error("empty branch", m) {}
};
struct ShotCapError : Error {
    explicit ShotCapError(const std::string& m) : Error("shot cap exceeded", m) {}
};
struct IoError : Error {
    explicit IoError(const std::string& m) : Error("io error", m) {}
};

}  // namespace qde
