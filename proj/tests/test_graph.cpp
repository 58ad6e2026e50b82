#include <doctest.h>

#include <random>

#include "helpers.hpp"

using namespace qde;

TEST_CASE("edge unitaries for the 3-vertex path") {
    auto u01 = edge_unitary(0, 1, std::nullopt, 3);
    auto u12 = edge_unitary(1, 2, std::nullopt, 3);
    for (std::size_t i = 0; i < 8; ++i) {
        CHECK(u01[i].real() == doctest::Approx((i == 6 || i == 7) ? -1.0 : 1.0));
        CHECK(u12[i].real() == doctest::Approx((i == 3 || i == 7) ? -1.0 : 1.0));
    }
}

TEST_CASE("3-vertex path graph state golden vector") {
    Graph g{3, {{0, 1, std::nullopt}, {1, 2, std::nullopt}}};
    auto r = graph_state(g);
    const double a = 1.0 / (2.0 * std::sqrt(2.0));
    const std::vector<double> signs = {1, 1, 1, -1, 1, 1, -1, 1};
    for (std::size_t i = 0; i < 8; ++i)
        CHECK(r.state.amps[i].real() == doctest::Approx(a * signs[i]).epsilon(1e-12));
}

TEST_CASE("edgeless graph is |+>^n") {
    auto r = graph_state(Graph{2, {}});
    for (const auto& amp : r.state.amps) CHECK(amp.real() == doctest::Approx(0.5));

    auto one = graph_state(Graph{1, {}});
    CHECK(one.state.dim() == 2);
    CHECK(one.state.amps[0].real() == doctest::Approx(1.0 / std::sqrt(2.0)));
}

TEST_CASE("single-edge graph state is CZ|++>") {
    auto r = graph_state(Graph{2, {{0, 1, std::nullopt}}});
    CHECK(r.state.amps[0].real() == doctest::Approx(0.5));
    CHECK(r.state.amps[1].real() == doctest::Approx(0.5));
    CHECK(r.state.amps[2].real() == doctest::Approx(0.5));
    CHECK(r.state.amps[3].real() == doctest::Approx(-0.5));

    // cross-check against the circuit backend
    Circuit c(2);
    c.append(Gate::h(0));
    c.append(Gate::h(1));
    c.append(Gate::cz(0, 1));
    auto sim = simulate(c, basis_state(RegisterLayout::qubits(2), 0));
    CHECK(testutil::max_abs_diff(r.state.amps, sim.amps) < 1e-14);
}

TEST_CASE("triangle graph state via independent sign oracle") {
    Graph g{3, {{0, 1, std::nullopt}, {0, 2, std::nullopt}, {1, 2, std::nullopt}}};
    auto r = graph_state(g);
    const double a = 1.0 / (2.0 * std::sqrt(2.0));
    for (std::size_t i = 0; i < 8; ++i) {
        const int b0 = int(i >> 2) & 1, b1 = int(i >> 1) & 1, b2 = int(i) & 1;
        const int sign = ((b0 & b1) + (b0 & b2) + (b1 & b2)) % 2 ? -1 : 1;
        CHECK(r.state.amps[i].real() == doctest::Approx(a * sign).epsilon(1e-12));
    }
}

TEST_CASE("graph state is independent of the edge order") {
    std::mt19937 rng(101);
    Graph g{4,
            {{0, 1, std::nullopt},
             {1, 2, 0.7},
             {2, 3, std::nullopt},
             {0, 3, 1.9},
             {0, 2, std::nullopt}}};
    auto ref = graph_state(g);
    for (int trial = 0; trial < 5; ++trial) {
        std::shuffle(g.edges.begin(), g.edges.end(), rng);
        auto r = graph_state(g);
        CHECK(testutil::max_abs_diff(r.state.amps, ref.state.amps) < 1e-14);
    }
}

TEST_CASE("weighted edge matches the Ising phase oracle") {
    const double phi = 0.6;
    auto r = graph_state(Graph{2, {{0, 1, phi}}});
    for (std::size_t i = 0; i < 4; ++i) {
        const double sa = (i & 2) ? -1.0 : 1.0;
        const double sb = (i & 1) ? -1.0 : 1.0;
        const Complex want = 0.5 * std::polar(1.0, -phi * sa * sb);
        CHECK(std::abs(r.state.amps[i] - want) < 1e-14);
    }
}

TEST_CASE("weight pi gives a global phase, not a CZ") {
    auto r = graph_state(Graph{2, {{0, 1, kPi}}});
    // exp(-i*pi*s*s') = -1 for every basis state: uniform amplitudes up to sign
    for (const auto& amp : r.state.amps) {
        CHECK(amp.real() == doctest::Approx(-0.5).epsilon(1e-12));
        CHECK(amp.imag() == doctest::Approx(0.0));
    }
}

TEST_CASE("zero-weight edge acts as the identity") {
    auto r = graph_state(Graph{2, {{0, 1, 0.0}}});
    for (const auto& amp : r.state.amps) CHECK(amp.real() == doctest::Approx(0.5));
}

TEST_CASE("invalid graphs are rejected") {
    CHECK_THROWS_AS(graph_state(Graph{0, {}}), GraphFormatError);
    CHECK_THROWS_AS(graph_state(Graph{2, {{0, 0, std::nullopt}}}), GraphFormatError);
    CHECK_THROWS_AS(graph_state(Graph{2, {{0, 2, std::nullopt}}}), GraphFormatError);
    CHECK_THROWS_AS(
        graph_state(Graph{2, {{0, 1, std::nullopt}, {1, 0, std::nullopt}}}),
        GraphFormatError);
}

TEST_CASE("graph states are normalized") {
    std::mt19937 rng(103);
    std::uniform_real_distribution<double> u(0.0, 2 * kPi);
    Graph g{5, {}};
    for (int a = 0; a < 5; ++a)
        for (int b = a + 1; b < 5; ++b)
            if (rng() % 2) g.edges.push_back({a, b, u(rng)});
    CHECK(graph_state(g).state.norm() == doctest::Approx(1.0).epsilon(1e-12));
}
