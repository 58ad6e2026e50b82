#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "qde/common.hpp"

namespace qde {

// Mixed-radix register: subsystem 0 is the leftmost (most significant)
// tensor factor. Only qubits (dim 2) and qutrits (dim 3) occur.
struct RegisterLayout {
    std::vector<int> local_dims;
    std::vector<std::string> labels;

    RegisterLayout() = default;
    RegisterLayout(std::vector<int> dims, std::vector<std::string> lbls)
        : local_dims(std::move(dims)), labels(std::move(lbls)) {
        if (labels.empty()) labels.assign(local_dims.size(), "q");
        if (local_dims.size() != labels.size())
            throw ShapeError("layout dims/labels length mismatch");
        for (int d : local_dims)
            if (d != 2 && d != 3) throw ShapeError("local dimension must be 2 or 3");
    }

    static RegisterLayout qubits(std::size_t n, const std::string& label = "q") {
        return RegisterLayout(std::vector<int>(n, 2), std::vector<std::string>(n, label));
    }
    static RegisterLayout qutrits(std::size_t n, const std::string& label = "q") {
        return RegisterLayout(std::vector<int>(n, 3), std::vector<std::string>(n, label));
    }

    std::size_t size() const { return local_dims.size(); }

    std::size_t dim() const {
        std::size_t d = 1;
        for (int ld : local_dims) d *= static_cast<std::size_t>(ld);
        return d;
    }

    bool all_qubits() const {
        for (int d : local_dims)
            if (d != 2) return false;
        return true;
    }

    bool operator==(const RegisterLayout& o) const { return local_dims == o.local_dims; }

    RegisterLayout concat(const RegisterLayout& rhs) const {
        RegisterLayout r;
        r.local_dims = local_dims;
        r.local_dims.insert(r.local_dims.end(), rhs.local_dims.begin(), rhs.local_dims.end());
        r.labels = labels;
        r.labels.insert(r.labels.end(), rhs.labels.begin(), rhs.labels.end());
        return r;
    }

    // Mixed-radix digits of a basis index, subsystem 0 first.
    std::vector<int> digits(std::size_t index) const {
        std::vector<int> d(size());
        for (std::size_t i = size(); i-- > 0;) {
            d[i] = static_cast<int>(index % local_dims[i]);
            index /= local_dims[i];
        }
        return d;
    }
};

struct StateVector {
    RegisterLayout layout;
    std::vector<Complex> amps;

    StateVector() = default;
    StateVector(RegisterLayout l, std::vector<Complex> a)
        : layout(std::move(l)), amps(std::move(a)) {
        if (amps.size() != layout.dim())
            throw ShapeError("amplitude count does not match register dimension");
    }

    std::size_t dim() const { return amps.size(); }

    double norm() const {
        double s = 0.0;
        for (const auto& a : amps) s += std::norm(a);
        return std::sqrt(s);
    }

    double probability(std::size_t index) const { return std::norm(amps.at(index)); }
};

inline StateVector basis_state(const RegisterLayout& layout, std::size_t index) {
    if (index >= layout.dim()) throw RangeError("basis index out of range");
    std::vector<Complex> a(layout.dim(), Complex(0.0, 0.0));
    a[index] = Complex(1.0, 0.0);
    return StateVector(layout, std::move(a));
}

inline StateVector kron(const StateVector& a, const StateVector& b) {
    StateVector r;
    r.layout = a.layout.concat(b.layout);
    r.amps.resize(a.dim() * b.dim());
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < b.dim(); ++j) r.amps[i * b.dim() + j] = a.amps[i] * b.amps[j];
    return r;
}

inline Complex inner_product(const StateVector& a, const StateVector& b) {
    if (!(a.layout == b.layout)) throw ShapeError("inner product of mismatched layouts");
    Complex s(0.0, 0.0);
    for (std::size_t i = 0; i < a.dim(); ++i) s += std::conj(a.amps[i]) * b.amps[i];
    return s;
}

inline double fidelity(const StateVector& a, const StateVector& b) {
    return std::norm(inner_product(a, b));
}

inline std::vector<double> normalize(const std::vector<double>& v) {
    double s = 0.0;
    for (double x : v) s += x * x;
    if (s == 0.0) throw DegenerateInputError("cannot normalize the zero vector");
    double inv = 1.0 / std::sqrt(s);
    std::vector<double> r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = v[i] * inv;
    return r;
}

inline std::vector<Complex> normalize(const std::vector<Complex>& v) {
    double s = 0.0;
    for (const auto& x : v) s += std::norm(x);
    if (s == 0.0) throw DegenerateInputError("cannot normalize the zero vector");
    double inv = 1.0 / std::sqrt(s);
    std::vector<Complex> r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = v[i] * inv;
    return r;
}

}  // namespace qde
