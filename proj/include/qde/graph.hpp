#pragma once

#include <algorithm>
#include <cmath>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "qde/encoding.hpp"

namespace qde {

// Undirected simple graph; vertices are 0-based internally. Edge weights,
// when present, are phases in radians.
struct Graph {
    int n_vertices = 0;
    struct Edge {
        int a, b;
        std::optional<double> weight;
    };
    std::vector<Edge> edges;

    void validate() const {
        std::set<std::pair<int, int>> seen;
        for (const auto& e : edges) {
            if (e.a < 0 || e.b < 0 || e.a >= n_vertices || e.b >= n_vertices)
                throw GraphFormatError("edge endpoint out of range");
            if (e.a == e.b) throw GraphFormatError("self-loop is not a simple graph edge");
            auto key = std::minmax(e.a, e.b);
            if (!seen.insert(key).second) throw GraphFormatError("duplicate edge");
        }
    }
};

// Diagonal of the edge unitary on 2^n basis states. Unweighted edges are CZ
// (-1 iff both qubits are 1); weighted edges are exp(-i*phi*sz_a*sz_b) with
// sz = +1/-1 for bit 0/1.
inline std::vector<Complex> edge_unitary(int a, int b, std::optional<double> phi, int n) {
    if (a < 0 || b < 0 || a >= n || b >= n || a == b)
        throw GraphFormatError("invalid edge qubit indices");
    const std::size_t dim = std::size_t(1) << n;
    const std::size_t ma = std::size_t(1) << (n - 1 - a);
    const std::size_t mb = std::size_t(1) << (n - 1 - b);
    std::vector<Complex> diag(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        if (phi) {
            const double sa = (i & ma) ? -1.0 : 1.0;
            const double sb = (i & mb) ? -1.0 : 1.0;
            diag[i] = std::polar(1.0, -*phi * sa * sb);
        } else {
            diag[i] = ((i & ma) && (i & mb)) ? Complex(-1.0, 0.0) : Complex(1.0, 0.0);
        }
    }
    return diag;
}

// |G> = prod_edges U_ab |+>^{(x)n}; edge order is immaterial since all edge
// unitaries are diagonal. Edges are applied in canonical sorted order.
inline EncodingResult graph_state(const Graph& g) {
    g.validate();
    if (g.n_vertices <= 0) throw GraphFormatError("graph needs at least one vertex");
    const int n = g.n_vertices;
    const std::size_t dim = std::size_t(1) << n;
    std::vector<Complex> amps(dim, Complex(1.0 / std::sqrt(double(dim)), 0.0));

    std::vector<Graph::Edge> edges = g.edges;
    std::sort(edges.begin(), edges.end(), [](const auto& l, const auto& r) {
        return std::minmax(l.a, l.b) < std::minmax(r.a, r.b);
    });
    for (const auto& e : edges) {
        const auto diag = edge_unitary(e.a, e.b, e.weight, n);
        for (std::size_t i = 0; i < dim; ++i) amps[i] *= diag[i];
    }
    return {StateVector(RegisterLayout::qubits(n, "vertex"), std::move(amps)), std::nullopt};
}

}  // namespace qde
