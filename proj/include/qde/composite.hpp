#pragma once

#include <cmath>
#include <vector>

#include "qde/encoding.hpp"

namespace qde {

inline EncodingResult product_encode(const std::vector<StateVector>& parts) {
    if (parts.empty()) throw DegenerateInputError("product of zero parts");
    StateVector acc = parts[0];
    for (std::size_t i = 1; i < parts.size(); ++i) acc = kron(acc, parts[i]);
    return {std::move(acc), std::nullopt};
}

// sum_t sqrt(p_t) |t> (x) |var_t>, tag register most significant. Variants
// are zero-padded to the largest variant dimension; the branch layout is
// taken from the first variant of maximal dimension.
inline EncodingResult sum_encode(const std::vector<StateVector>& variants,
                                 std::vector<double> weights = {}) {
    const std::size_t k = variants.size();
    if (k < 2) throw DegenerateInputError("sum type needs at least two variants");
    if (weights.empty()) weights.assign(k, 1.0 / double(k));
    if (weights.size() != k) throw ShapeError("weight count does not match variant count");
    double wsum = 0.0;
    for (double w : weights) {
        if (w < 0.0) throw DomainError("negative branch weight");
        wsum += w;
    }
    if (wsum == 0.0) throw DegenerateInputError("zero weight vector");
    if (std::abs(wsum - 1.0) > 1e-9) throw DomainError("branch weights must sum to 1");

    std::size_t branch_dim = 0, widest = 0;
    for (std::size_t t = 0; t < k; ++t)
        if (variants[t].dim() > branch_dim) {
            branch_dim = variants[t].dim();
            widest = t;
        }
    int tag_qubits = 0;
    while ((std::size_t(1) << tag_qubits) < k) ++tag_qubits;
    const std::size_t tag_dim = std::size_t(1) << tag_qubits;

    RegisterLayout layout =
        RegisterLayout::qubits(tag_qubits, "tag").concat(variants[widest].layout);
    std::vector<Complex> amps(tag_dim * branch_dim, Complex(0.0, 0.0));
    for (std::size_t t = 0; t < k; ++t) {
        const double w = std::sqrt(weights[t]);
        for (std::size_t j = 0; j < variants[t].dim(); ++j)
            amps[t * branch_dim + j] = w * variants[t].amps[j];
    }
    return {StateVector(std::move(layout), std::move(amps)), std::nullopt};
}

// Projects onto tag = t, drops the tag register and renormalizes.
inline EncodingResult sum_select(const StateVector& state, std::size_t tag) {
    int tag_qubits = 0;
    while (tag_qubits < static_cast<int>(state.layout.size()) &&
           state.layout.labels[tag_qubits] == "tag")
        ++tag_qubits;
    if (tag_qubits == 0) throw ShapeError("state has no tag register");
    const std::size_t tag_dim = std::size_t(1) << tag_qubits;
    if (tag >= tag_dim) throw RangeError("tag value out of range");
    const std::size_t branch_dim = state.dim() / tag_dim;

    std::vector<Complex> branch(state.amps.begin() + tag * branch_dim,
                                state.amps.begin() + (tag + 1) * branch_dim);
    double p = 0.0;
    for (const auto& a : branch) p += std::norm(a);
    if (p < 1e-12) throw EmptyBranchError("selected tag has zero probability");
    const double inv = 1.0 / std::sqrt(p);
    for (auto& a : branch) a *= inv;

    RegisterLayout layout(
        std::vector<int>(state.layout.local_dims.begin() + tag_qubits,
                         state.layout.local_dims.end()),
        std::vector<std::string>(state.layout.labels.begin() + tag_qubits,
                                 state.layout.labels.end()));
    return {StateVector(std::move(layout), std::move(branch)), std::nullopt};
}

}  // namespace qde
