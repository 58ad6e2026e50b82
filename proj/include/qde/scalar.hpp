#pragma once

#include <cmath>
#include <string>

#include "qde/encoding.hpp"

namespace qde {

struct ScalarEncoding {
    StateVector state;
    Circuit circuit;
    struct Meta {
        std::string scheme;
        int bits = 0;
        double theta = 0.0;
        double phi = 0.0;
    } meta;
};

// |x> on m qubits, bit m-1 leftmost. Circuit: X on each 1-bit.
inline ScalarEncoding encode_basis_integer(std::uint64_t x, int m) {
    if (m <= 0) throw RangeError("bit count must be positive");
    if (m < 64 && x >= (std::uint64_t(1) << m)) throw RangeError("integer does not fit the bit count");
    ScalarEncoding e;
    e.meta = {"basis", m, 0.0, 0.0};
    e.circuit = Circuit(m);
    for (int q = 0; q < m; ++q)
        if ((x >> (m - 1 - q)) & 1) e.circuit.append(Gate::x(q));
    e.state = basis_state(RegisterLayout::qubits(m, "bit"), static_cast<std::size_t>(x));
    return e;
}

// Basis encoding of round(x * 2^frac_bits) on int_bits + frac_bits qubits.
inline ScalarEncoding encode_fixed_point(double x, int int_bits, int frac_bits) {
    if (int_bits < 0 || frac_bits < 0 || int_bits + frac_bits <= 0)
        throw RangeError("invalid bit widths");
    if (x < 0.0) throw RangeError("fixed-point encoding requires a non-negative value");
    if (x >= std::ldexp(1.0, int_bits)) throw RangeError("value exceeds the integer range");
    const std::uint64_t v = static_cast<std::uint64_t>(std::llround(std::ldexp(x, frac_bits)));
    const int m = int_bits + frac_bits;
    if (m < 64 && v >= (std::uint64_t(1) << m)) throw RangeError("value overflows after rounding");
    ScalarEncoding e = encode_basis_integer(v, m);
    e.meta.scheme = "fixed-point";
    return e;
}

// cos(x)|0> + sin(x)|1>; the preparing gate is RY(2x).
inline ScalarEncoding encode_angle(double x) {
    if (!(x >= 0.0 && x <= 2.0 * kPi)) throw RangeError("angle must lie in [0, 2*pi]");
    ScalarEncoding e;
    e.meta = {"angle", 1, x, 0.0};
    e.state = StateVector(RegisterLayout::qubits(1, "value"),
                          {Complex(std::cos(x), 0.0), Complex(std::sin(x), 0.0)});
    e.circuit = Circuit(1);
    e.circuit.append(Gate::ry(0, 2.0 * x));
    return e;
}

// cos(|z|/2)|0> + e^{i arg z} sin(|z|/2)|1>; circuit RY(|z|) then Phase(arg z).
inline ScalarEncoding encode_complex(Complex z) {
    const double theta = std::abs(z);
    if (theta > 2.0 * kPi) throw RangeError("complex modulus must lie in [0, 2*pi]");
    const double phi = (theta == 0.0) ? 0.0 : std::arg(z);
    ScalarEncoding e;
    e.meta = {"complex", 1, theta, phi};
    e.state = StateVector(RegisterLayout::qubits(1, "value"),
                          {Complex(std::cos(theta / 2), 0.0),
                           std::polar(std::sin(theta / 2), phi)});
    e.circuit = Circuit(1);
    e.circuit.append(Gate::ry(0, theta));
    e.circuit.append(Gate::phase(0, phi));
    return e;
}

}  // namespace qde
