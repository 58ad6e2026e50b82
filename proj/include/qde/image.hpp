#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <vector>

#include "qde/encoding.hpp"
#include "qde/vector.hpp"

namespace qde {

// Row-major pixel grid; depth is bits per pixel.
struct Image {
    int width = 0;
    int height = 0;
    int depth = 8;
    std::vector<int> pixels;

    Image() = default;
    Image(int w, int h, int d, std::vector<int> px)
        : width(w), height(h), depth(d), pixels(std::move(px)) {
        if (w <= 0 || h <= 0 || d <= 0) throw ShapeError("image dimensions must be positive");
        if (pixels.size() != static_cast<std::size_t>(w) * h)
            throw ShapeError("pixel count does not match image dimensions");
        const int maxval = (1 << d) - 1;
        for (int p : pixels)
            if (p < 0 || p > maxval) throw RangeError("pixel value out of depth range");
    }

    int at(int row, int col) const { return pixels[static_cast<std::size_t>(row) * width + col]; }
    int max_value() const { return (1 << depth) - 1; }

    bool operator==(const Image& o) const {
        return width == o.width && height == o.height && depth == o.depth && pixels == o.pixels;
    }
};

struct BitplaneSet {
    std::vector<Image> planes;  // planes[b] holds bit b of every pixel
};

namespace detail {

inline int log2_exact(int v, const char* what) {
    int n = 0;
    while ((1 << n) < v) ++n;
    if ((1 << n) != v) throw ShapeError(std::string(what) + " must be a power of two");
    return n;
}

inline int log3_exact(int v, const char* what) {
    int n = 0;
    long long p = 1;
    while (p < v) {
        p *= 3;
        ++n;
    }
    if (p != v) throw ShapeError(std::string(what) + " must be a power of three");
    return n;
}

inline void require_square_pow2(const Image& img) {
    if (img.width != img.height) throw ShapeError("image must be square");
    log2_exact(img.width, "image side");
}

inline double pixel_angle(int value, int maxval) {
    return value * kPi / (2.0 * maxval);
}

}  // namespace detail

// --- FRQI -------------------------------------------------------------------
// (1/2^n) sum_i (cos t_i |0> + sin t_i |1>) (x) |i>, i = row*side + col.
// Layout: [color qubit, 2n position qubits], color most significant.

inline EncodingResult frqi_encode(const Image& img) {
    detail::require_square_pow2(img);
    const int n = detail::log2_exact(img.width, "image side");
    const std::size_t npos = std::size_t(1) << (2 * n);
    RegisterLayout layout = RegisterLayout::qubits(1, "color")
                                .concat(RegisterLayout::qubits(2 * n, "position"));
    std::vector<Complex> amps(2 * npos, Complex(0.0, 0.0));
    const double scale = 1.0 / double(std::size_t(1) << n);
    for (std::size_t i = 0; i < npos; ++i) {
        const double t = detail::pixel_angle(img.pixels[i], img.max_value());
        amps[i] = Complex(scale * std::cos(t), 0.0);
        amps[npos + i] = Complex(scale * std::sin(t), 0.0);
    }
    return {StateVector(std::move(layout), std::move(amps)), std::nullopt};
}

// QPIXL-style preparation: H on every position qubit, then one MCRY per
// pixel on the color qubit controlled on the pixel's position pattern.
inline Circuit frqi_prep_circuit(const Image& img) {
    detail::require_square_pow2(img);
    const int n = detail::log2_exact(img.width, "image side");
    const int nq = 2 * n + 1;
    Circuit c(nq);
    for (int q = 1; q < nq; ++q) c.append(Gate::h(q));
    const std::size_t npos = std::size_t(1) << (2 * n);
    for (std::size_t i = 0; i < npos; ++i) {
        const double t = detail::pixel_angle(img.pixels[i], img.max_value());
        std::vector<std::pair<int, int>> controls;
        for (int q = 1; q < nq; ++q)
            controls.emplace_back(q, static_cast<int>((i >> (nq - 1 - q)) & 1));
        c.append(Gate::mcry(std::move(controls), 0, 2.0 * t));
    }
    return c;
}

inline Image frqi_decode_exact(const StateVector& state, int depth = 8) {
    const std::size_t dim = state.dim();
    if (state.layout.size() < 3 || !state.layout.all_qubits() || state.layout.size() % 2 == 0)
        throw FormatError("state is not FRQI-shaped");
    const std::size_t npos = dim / 2;
    const int n2 = static_cast<int>(state.layout.size()) - 1;
    const int side = 1 << (n2 / 2);
    const int maxval = (1 << depth) - 1;
    std::vector<int> pixels(npos);
    for (std::size_t i = 0; i < npos; ++i) {
        const double a0 = std::abs(state.amps[i]);
        const double a1 = std::abs(state.amps[npos + i]);
        if (std::abs(a0 * a0 + a1 * a1 - 1.0 / double(npos)) > 1e-9)
            throw FormatError("position marginal is not uniform; not an FRQI state");
        const double t = std::atan2(a1, a0);
        pixels[i] = static_cast<int>(std::lround(t * 2.0 * maxval / kPi));
    }
    return Image(side, side, depth, std::move(pixels));
}

// Shot-based FRQI readout: per position, estimate the angle from the
// empirical color distribution. Retrieval is probabilistic by construction.
inline Image frqi_decode_sampled(const StateVector& state, std::uint64_t shots,
                                 std::uint64_t seed, int depth = 8) {
    const std::size_t npos = state.dim() / 2;
    if (shots == 0) throw RangeError("sampled decode needs at least one shot");
    const int n2 = static_cast<int>(state.layout.size()) - 1;
    const int side = 1 << (n2 / 2);
    std::vector<std::uint64_t> total(npos, 0), ones(npos, 0);
    const std::vector<double> cum = cumulative_probabilities(state);
    for (std::uint64_t s = 0; s < shots; ++s) {
        const std::size_t outcome = sample_one(cum, seed, s);
        ++total[outcome % npos];
        if (outcome >= npos) ++ones[outcome % npos];
    }
    const int maxval = (1 << depth) - 1;
    std::vector<int> pixels(npos, 0);
    for (std::size_t i = 0; i < npos; ++i) {
        if (total[i] == 0) continue;
        const double p1 = double(ones[i]) / double(total[i]);
        const double t = std::asin(std::min(1.0, std::sqrt(p1)));
        pixels[i] = static_cast<int>(std::lround(t * 2.0 * maxval / kPi));
    }
    return Image(side, side, depth, std::move(pixels));
}

// --- NEQR / GNEQR -----------------------------------------------------------
// (1/2^n) sum_{y,x} |f(x,y)>|y>|x>, d color qubits most significant.

inline EncodingResult neqr_encode(const Image& img) {
    detail::require_square_pow2(img);
    const int n = detail::log2_exact(img.width, "image side");
    const int d = img.depth;
    RegisterLayout layout = RegisterLayout::qubits(d, "color")
                                .concat(RegisterLayout::qubits(n, "position-y"))
                                .concat(RegisterLayout::qubits(n, "position-x"));
    std::vector<Complex> amps(layout.dim(), Complex(0.0, 0.0));
    const double scale = 1.0 / double(std::size_t(1) << n);
    for (int y = 0; y < img.height; ++y)
        for (int x = 0; x < img.width; ++x) {
            const std::size_t idx = (std::size_t(img.at(y, x)) << (2 * n)) |
                                    (std::size_t(y) << n) | std::size_t(x);
            amps[idx] = Complex(scale, 0.0);
        }
    return {StateVector(std::move(layout), std::move(amps)), std::nullopt};
}

namespace detail {

struct NeqrShape {
    int d, ny, nx;  // color / y / x qubit counts
};

inline NeqrShape neqr_shape(const RegisterLayout& layout) {
    NeqrShape s{0, 0, 0};
    for (const auto& l : layout.labels) {
        if (l == "color")
            ++s.d;
        else if (l == "position-y")
            ++s.ny;
        else if (l == "position-x")
            ++s.nx;
        else
            throw FormatError("unexpected subsystem label '" + l + "' for NEQR decode");
    }
    if (s.d == 0 || s.ny == 0 || s.nx == 0)
        throw ShapeError("NEQR layout needs color and position qubits");
    return s;
}

}  // namespace detail

inline Image neqr_decode_exact(const StateVector& state) {
    const auto s = detail::neqr_shape(state.layout);
    const int w = 1 << s.nx, h = 1 << s.ny;
    const std::size_t npos = std::size_t(1) << (s.ny + s.nx);
    std::vector<int> pixels(std::size_t(w) * h, -1);
    for (std::size_t idx = 0; idx < state.dim(); ++idx) {
        if (std::abs(state.amps[idx]) < 1e-9) continue;
        const std::size_t pos = idx % npos;
        const int color = static_cast<int>(idx / npos);
        const int y = static_cast<int>(pos >> s.nx);
        const int x = static_cast<int>(pos & ((std::size_t(1) << s.nx) - 1));
        int& px = pixels[std::size_t(y) * w + x];
        if (px >= 0 && px != color) throw FormatError("ambiguous color amplitude at a position");
        px = color;
    }
    for (int& px : pixels)
        if (px < 0) throw FormatError("position with no color amplitude; not an NEQR state");
    return Image(w, h, s.d, std::move(pixels));
}

// Samples until every position has been observed at least once; each
// observation fixes that pixel exactly.
inline std::pair<Image, std::uint64_t> neqr_decode_sampled(const StateVector& state,
                                                           std::uint64_t seed,
                                                           std::uint64_t shot_cap = 10000000) {
    const auto s = detail::neqr_shape(state.layout);
    if (s.ny + s.nx == 0) throw ShapeError("no position qubits to sample");
    const int w = 1 << s.nx, h = 1 << s.ny;
    const std::size_t npos = std::size_t(1) << (s.ny + s.nx);
    std::vector<int> pixels(std::size_t(w) * h, -1);
    std::size_t remaining = npos;
    const std::vector<double> cum = cumulative_probabilities(state);
    std::uint64_t shot = 0;
    while (remaining > 0) {
        if (shot >= shot_cap) throw ShotCapError("sampled decode exceeded the shot cap");
        const std::size_t idx = sample_one(cum, seed, shot++);
        const std::size_t pos = idx % npos;
        const int color = static_cast<int>(idx / npos);
        const int y = static_cast<int>(pos >> s.nx);
        const int x = static_cast<int>(pos & ((std::size_t(1) << s.nx) - 1));
        int& px = pixels[std::size_t(y) * w + x];
        if (px < 0) {
            px = color;
            --remaining;
        }
    }
    return {Image(w, h, s.d, std::move(pixels)), shot};
}

// GNEQR: rectangular 2^m x 2^n image (width 2^m, height 2^n),
// (1/sqrt(2^{m+n})) sum |f(x,y)>|y>|x> with m x-qubits.
inline EncodingResult gneqr_encode(const Image& img) {
    const int m = detail::log2_exact(img.width, "image width");
    const int n = detail::log2_exact(img.height, "image height");
    const int d = img.depth;
    RegisterLayout layout = RegisterLayout::qubits(d, "color")
                                .concat(RegisterLayout::qubits(n, "position-y"))
                                .concat(RegisterLayout::qubits(m, "position-x"));
    std::vector<Complex> amps(layout.dim(), Complex(0.0, 0.0));
    const double scale = 1.0 / std::sqrt(double(std::size_t(1) << (m + n)));
    for (int y = 0; y < img.height; ++y)
        for (int x = 0; x < img.width; ++x) {
            const std::size_t idx = (std::size_t(img.at(y, x)) << (m + n)) |
                                    (std::size_t(y) << m) | std::size_t(x);
            amps[idx] = Complex(scale, 0.0);
        }
    return {StateVector(std::move(layout), std::move(amps)), std::nullopt};
}

// --- QPIE -------------------------------------------------------------------
// Amplitude encoding of the normalized row-major pixel vector. When both
// sides are powers of two (no padding needed) the layout records the
// row/column qubit split so qft2d can address them.

inline EncodingResult qpie_encode(const Image& img) {
    std::vector<double> flat(img.pixels.begin(), img.pixels.end());
    bool any = false;
    for (double v : flat) any = any || v != 0.0;
    if (!any) throw DegenerateInputError("all-zero image has no QPIE state");
    const std::vector<double> padded = pad_to_power_of_two(flat);
    const std::vector<double> normed = normalize(padded);
    int n = 0;
    while ((std::size_t(1) << n) < normed.size()) ++n;

    RegisterLayout layout;
    const bool w_pow2 = (img.width & (img.width - 1)) == 0;
    const bool h_pow2 = (img.height & (img.height - 1)) == 0;
    if (w_pow2 && h_pow2 && padded.size() == flat.size()) {
        int nx = 0, ny = 0;
        while ((1 << nx) < img.width) ++nx;
        while ((1 << ny) < img.height) ++ny;
        layout = RegisterLayout::qubits(ny, "position-y")
                     .concat(RegisterLayout::qubits(nx, "position-x"));
    } else {
        layout = RegisterLayout::qubits(n, "position");
    }
    std::vector<Complex> amps(normed.size());
    for (std::size_t i = 0; i < normed.size(); ++i) amps[i] = Complex(normed[i], 0.0);
    return {StateVector(std::move(layout), std::move(amps)), std::nullopt};
}

// 2D QFT: QFT on the row-index qubits, then on the column-index qubits.
inline StateVector qpie_qft2d(const StateVector& state) {
    std::vector<int> rows, cols;
    for (std::size_t q = 0; q < state.layout.size(); ++q) {
        if (state.layout.labels[q] == "position-y")
            rows.push_back(static_cast<int>(q));
        else if (state.layout.labels[q] == "position-x")
            cols.push_back(static_cast<int>(q));
    }
    if (rows.empty() || cols.empty())
        throw UnsupportedLayoutError("qft2d needs a row/column qubit split in the layout");
    Circuit c(static_cast<int>(state.layout.size()));
    c.append(Gate::qft(rows));
    c.append(Gate::qft(cols));
    return simulate(c, state);
}

// --- BRQI -------------------------------------------------------------------
// 8-bit 2^k x 2^n image with x = row index, y = column index:
// (1/sqrt(2^{k+n+3})) sum_{b,x,y} |f(x,y,b)>|x>|y>|b>, b least significant.

inline BitplaneSet bitplanes(const Image& img) {
    BitplaneSet set;
    for (int b = 0; b < img.depth; ++b) {
        std::vector<int> px(img.pixels.size());
        for (std::size_t i = 0; i < img.pixels.size(); ++i) px[i] = (img.pixels[i] >> b) & 1;
        set.planes.emplace_back(img.width, img.height, 1, std::move(px));
    }
    return set;
}

inline EncodingResult brqi_encode(const Image& img) {
    if (img.depth != 8) throw UnsupportedDepthError("BRQI is defined for 8-bit images");
    const int k = detail::log2_exact(img.height, "image height");
    const int n = detail::log2_exact(img.width, "image width");
    RegisterLayout layout = RegisterLayout::qubits(1, "color")
                                .concat(RegisterLayout::qubits(k, "position-x"))
                                .concat(RegisterLayout::qubits(n, "position-y"))
                                .concat(RegisterLayout::qubits(3, "bitplane"));
    std::vector<Complex> amps(layout.dim(), Complex(0.0, 0.0));
    const double scale = 1.0 / std::sqrt(double(std::size_t(1) << (k + n + 3)));
    for (int x = 0; x < img.height; ++x)
        for (int y = 0; y < img.width; ++y)
            for (int b = 0; b < 8; ++b) {
                const int bit = (img.at(x, y) >> b) & 1;
                const std::size_t idx = (std::size_t(bit) << (k + n + 3)) |
                                        (std::size_t(x) << (n + 3)) | (std::size_t(y) << 3) |
                                        std::size_t(b);
                amps[idx] = Complex(scale, 0.0);
            }
    return {StateVector(std::move(layout), std::move(amps)), std::nullopt};
}

// --- qutrit encodings -------------------------------------------------------

struct TernaryImage {
    Image image;                             // 3^n x 3^n, pixels <= 255
    std::vector<std::array<int, 6>> trits;   // per pixel, trit b at index b
};

inline TernaryImage ternary_image(const Image& img) {
    if (img.width != img.height) throw ShapeError("qutrit image must be square");
    detail::log3_exact(img.width, "image side");
    TernaryImage t;
    t.image = img;
    t.trits.resize(img.pixels.size());
    for (std::size_t i = 0; i < img.pixels.size(); ++i) {
        if (img.pixels[i] > 255) throw RangeError("qutrit encoding expects 8-bit pixels");
        int v = img.pixels[i];
        for (int b = 0; b < 6; ++b) {
            t.trits[i][b] = v % 3;
            v /= 3;
        }
    }
    return t;
}

// (1/3^n) sum_i (cos t_i |0> + sin t_i |1> + 0 |2>) (x) |i> on 2n+1 qutrits.
inline EncodingResult qutrit_frqi_encode(const Image& img) {
    if (img.width != img.height) throw ShapeError("qutrit image must be square");
    const int n = detail::log3_exact(img.width, "image side");
    std::size_t npos = 1;
    for (int i = 0; i < 2 * n; ++i) npos *= 3;
    RegisterLayout layout = RegisterLayout::qutrits(1, "color")
                                .concat(RegisterLayout::qutrits(2 * n, "position"));
    std::vector<Complex> amps(3 * npos, Complex(0.0, 0.0));
    double scale = 1.0;
    for (int i = 0; i < n; ++i) scale /= 3.0;
    for (std::size_t i = 0; i < npos; ++i) {
        const double t = detail::pixel_angle(img.pixels[i], img.max_value());
        amps[i] = Complex(scale * std::cos(t), 0.0);
        amps[npos + i] = Complex(scale * std::sin(t), 0.0);
    }
    return {StateVector(std::move(layout), std::move(amps)), std::nullopt};
}

// Accumulates sum_{b=0}^{5} |trit_b(pixel_i)>|i> and renormalizes to unit
// norm (the duplicate basis terms make a fixed prefactor non-normalizing).
inline EncodingResult qutrit_neqr_encode(const Image& img) {
    const TernaryImage t = ternary_image(img);
    const int n = detail::log3_exact(img.width, "image side");
    std::size_t npos = 1;
    for (int i = 0; i < 2 * n; ++i) npos *= 3;
    RegisterLayout layout = RegisterLayout::qutrits(1, "color")
                                .concat(RegisterLayout::qutrits(2 * n, "position"));
    std::vector<Complex> amps(3 * npos, Complex(0.0, 0.0));
    for (std::size_t i = 0; i < npos; ++i)
        for (int b = 0; b < 6; ++b) amps[std::size_t(t.trits[i][b]) * npos + i] += 1.0;
    amps = normalize(amps);
    return {StateVector(std::move(layout), std::move(amps)), std::nullopt};
}

}  // namespace qde
