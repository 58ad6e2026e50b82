#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

#include "qde/encoding.hpp"
#include "qde/scalar.hpp"

namespace qde {

// Conditional-probability tree behind the recursive amplitude preparation
// circuit. prob_one[L][p] = Pr(qubit L = 1 | qubits 0..L-1 = bits of p),
// or -1 for a dead branch (prefix probability zero).
struct PrepTree {
    int n_qubits = 0;
    std::vector<std::vector<double>> prob_one;

    // Amplitude the circuit produces at basis index b (product of the
    // conditional square roots along the path).
    double leaf_amplitude(std::size_t b) const {
        double amp = 1.0;
        for (int L = 0; L < n_qubits; ++L) {
            const std::size_t prefix = b >> (n_qubits - L);
            const double p = prob_one[L][prefix];
            if (p < 0.0) return 0.0;
            const bool one = (b >> (n_qubits - 1 - L)) & 1;
            amp *= std::sqrt(one ? p : 1.0 - p);
        }
        return amp;
    }
};

inline EncodingResult encode_angle_vector(const std::vector<double>& x) {
    if (x.empty()) throw DegenerateInputError("empty input vector");
    EncodingResult r;
    r.state = encode_angle(x[0]).state;
    Circuit c(static_cast<int>(x.size()));
    c.append(Gate::ry(0, 2.0 * x[0]));
    for (std::size_t i = 1; i < x.size(); ++i) {
        r.state = kron(r.state, encode_angle(x[i]).state);
        c.append(Gate::ry(static_cast<int>(i), 2.0 * x[i]));
    }
    r.circuit = std::move(c);
    return r;
}

inline std::vector<double> pad_to_power_of_two(std::vector<double> x) {
    if (x.empty()) throw DegenerateInputError("empty input vector");
    std::size_t n = 1;
    while (n < x.size()) n *= 2;
    x.resize(n, 0.0);
    return x;
}

inline EncodingResult encode_amplitude(const std::vector<double>& x) {
    const std::vector<double> padded = pad_to_power_of_two(x);
    const std::vector<double> normed = normalize(padded);
    int n = 0;
    while ((std::size_t(1) << n) < normed.size()) ++n;
    std::vector<Complex> amps(normed.size());
    for (std::size_t i = 0; i < normed.size(); ++i) amps[i] = Complex(normed[i], 0.0);
    EncodingResult r;
    r.state = StateVector(RegisterLayout::qubits(n, "amplitude"), std::move(amps));
    return r;
}

inline std::vector<double> vectorize_matrix(const std::vector<std::vector<double>>& m) {
    if (m.empty() || m[0].empty()) throw DegenerateInputError("empty matrix");
    const std::size_t rows = m.size(), cols = m[0].size();
    for (const auto& row : m)
        if (row.size() != cols) throw ShapeError("ragged matrix rows");
    std::vector<double> v;
    v.reserve(rows * cols);
    for (std::size_t c = 0; c < cols; ++c)
        for (std::size_t r = 0; r < rows; ++r) v.push_back(m[r][c]);
    return v;
}

inline PrepTree build_prep_tree(const std::vector<double>& x) {
    for (double v : x)
        if (v < 0.0) throw UnsupportedSignError("prep tree requires non-negative entries");
    const std::vector<double> normed = normalize(pad_to_power_of_two(x));
    int n = 0;
    while ((std::size_t(1) << n) < normed.size()) ++n;

    PrepTree t;
    t.n_qubits = n;
    // block_prob[p] at level L = probability of the length-L prefix p
    std::vector<double> block_prob = {1.0};
    for (int L = 0; L < n; ++L) {
        const std::size_t prefixes = std::size_t(1) << L;
        const std::size_t block = normed.size() >> L;
        std::vector<double> cond(prefixes, -1.0), next(prefixes * 2, 0.0);
        for (std::size_t p = 0; p < prefixes; ++p) {
            double one = 0.0;
            for (std::size_t j = block / 2; j < block; ++j) {
                const double a = normed[p * block + j];
                one += a * a;
            }
            next[2 * p] = block_prob[p] - one;
            next[2 * p + 1] = one;
            if (block_prob[p] > 0.0) cond[p] = std::min(1.0, one / block_prob[p]);
        }
        t.prob_one.push_back(std::move(cond));
        block_prob = std::move(next);
    }
    return t;
}

// Depth-first emission, 1-branch first; 0-polarity controls are realized by
// X-conjugation so the emitted text shows plain positive-control MCRYs.
inline Circuit prep_circuit_from_tree(const PrepTree& t) {
    Circuit c(t.n_qubits);
    auto emit = [&](int level, std::size_t prefix) {
        const double p = t.prob_one[level][prefix];
        const double theta = 2.0 * std::asin(std::sqrt(p));
        if (level == 0) {
            c.append(Gate::ry(0, theta));
            return;
        }
        std::vector<int> flipped;
        std::vector<std::pair<int, int>> controls;
        for (int q = 0; q < level; ++q) {
            const bool bit = (prefix >> (level - 1 - q)) & 1;
            if (!bit) {
                c.append(Gate::x(q));
                flipped.push_back(q);
            }
            controls.emplace_back(q, 1);
        }
        c.append(Gate::mcry(std::move(controls), level, theta));
        for (auto it = flipped.rbegin(); it != flipped.rend(); ++it) c.append(Gate::x(*it));
    };
    auto dfs = [&](auto&& self, int level, std::size_t prefix) -> void {
        if (level == t.n_qubits) return;
        if (t.prob_one[level][prefix] < 0.0) return;  // dead branch
        emit(level, prefix);
        self(self, level + 1, prefix * 2 + 1);
        self(self, level + 1, prefix * 2);
    };
    dfs(dfs, 0, 0);
    return c;
}

}  // namespace qde
