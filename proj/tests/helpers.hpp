#pragma once

#include <cmath>
#include <random>
#include <vector>

#include "qde/qde.hpp"

namespace testutil {

inline qde::StateVector random_qubit_state(int n, std::mt19937& rng) {
    std::normal_distribution<double> g(0.0, 1.0);
    std::vector<qde::Complex> a(std::size_t(1) << n);
    for (auto& x : a) x = qde::Complex(g(rng), g(rng));
    return qde::StateVector(qde::RegisterLayout::qubits(n), qde::normalize(a));
}

inline std::vector<double> random_nonneg_vector(std::size_t len, std::mt19937& rng) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    std::vector<double> v(len);
    bool any = false;
    for (auto& x : v) {
        x = u(rng);
        any = any || x > 0.0;
    }
    if (!any) v[0] = 1.0;
    return v;
}

inline double max_abs_diff(const std::vector<qde::Complex>& a,
                           const std::vector<qde::Complex>& b) {
    double m = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
    return m;
}

// Direct unitary DFT oracle, F[r][c] = e^{2*pi*i*r*c/N}/sqrt(N).
inline std::vector<qde::Complex> dft_oracle(const std::vector<qde::Complex>& v) {
    const std::size_t n = v.size();
    std::vector<qde::Complex> out(n, qde::Complex(0, 0));
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c)
            out[r] += std::polar(1.0 / std::sqrt(double(n)),
                                 2.0 * qde::kPi * double(r * c) / double(n)) *
                      v[c];
    return out;
}

// 2D unitary DFT of a H x W grid flattened row-major.
inline std::vector<qde::Complex> dft2d_oracle(const std::vector<qde::Complex>& grid, int h,
                                              int w) {
    std::vector<qde::Complex> out(grid.size(), qde::Complex(0, 0));
    const double scale = 1.0 / std::sqrt(double(h) * w);
    for (int u = 0; u < h; ++u)
        for (int v = 0; v < w; ++v) {
            qde::Complex acc(0, 0);
            for (int y = 0; y < h; ++y)
                for (int x = 0; x < w; ++x)
                    acc += std::polar(1.0, 2.0 * qde::kPi *
                                               (double(u) * y / h + double(v) * x / w)) *
                           grid[std::size_t(y) * w + x];
            out[std::size_t(u) * w + v] = scale * acc;
        }
    return out;
}

// The 2x2 grayscale test grid used throughout the golden tests.
inline qde::Image test_image_2x2() { return qde::Image(2, 2, 8, {0, 85, 170, 255}); }

}  // namespace testutil
