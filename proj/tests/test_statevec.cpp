#include <doctest.h>

#include <random>

#include "helpers.hpp"

using namespace qde;

TEST_CASE("basis_state places a single unit amplitude") {
    auto s = basis_state(RegisterLayout::qubits(3), 5);
    for (std::size_t i = 0; i < 8; ++i)
        CHECK(s.amps[i] == Complex(i == 5 ? 1.0 : 0.0, 0.0));

    auto one = basis_state(RegisterLayout::qubits(1), 0);
    CHECK(one.amps[0] == Complex(1.0, 0.0));

    auto qutrit = basis_state(RegisterLayout::qutrits(2), 4);
    CHECK(qutrit.dim() == 9);
    CHECK(qutrit.amps[4] == Complex(1.0, 0.0));

    CHECK_THROWS_AS(basis_state(RegisterLayout::qubits(2), 4), RangeError);
}

TEST_CASE("kron reproduces |101> = |1> x |0> x |1>") {
    auto q0 = basis_state(RegisterLayout::qubits(1), 0);
    auto q1 = basis_state(RegisterLayout::qubits(1), 1);
    auto s = kron(kron(q1, q0), q1);
    CHECK(s.dim() == 8);
    CHECK(s.amps[5].real() == doctest::Approx(1.0));

    // |0> x psi puts psi in the upper block
    std::mt19937 rng(1);
    auto psi = testutil::random_qubit_state(2, rng);
    auto padded = kron(q0, psi);
    for (std::size_t i = 0; i < 4; ++i) CHECK(padded.amps[i] == psi.amps[i]);
    for (std::size_t i = 4; i < 8; ++i) CHECK(padded.amps[i] == Complex(0, 0));
}

TEST_CASE("kron preserves norm and is associative") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        auto a = testutil::random_qubit_state(2, rng);
        auto b = testutil::random_qubit_state(3, rng);
        auto c = testutil::random_qubit_state(1, rng);
        CHECK(kron(a, b).norm() == doctest::Approx(a.norm() * b.norm()).epsilon(1e-12));
        CHECK(testutil::max_abs_diff(kron(kron(a, b), c).amps, kron(a, kron(b, c)).amps) ==
              doctest::Approx(0.0));
    }
}

TEST_CASE("basis_state matches digit-by-digit kron for mixed radix") {
    RegisterLayout layout({2, 3, 2}, {"a", "b", "c"});
    for (std::size_t idx = 0; idx < layout.dim(); ++idx) {
        auto direct = basis_state(layout, idx);
        auto digits = layout.digits(idx);
        StateVector built = basis_state(RegisterLayout({2}, {"a"}), digits[0]);
        built = kron(built, basis_state(RegisterLayout({3}, {"b"}), digits[1]));
        built = kron(built, basis_state(RegisterLayout({2}, {"c"}), digits[2]));
        CHECK(testutil::max_abs_diff(direct.amps, built.amps) == doctest::Approx(0.0));
    }
}

TEST_CASE("inner_product conjugates the left argument") {
    std::mt19937 rng(3);
    auto psi = testutil::random_qubit_state(3, rng);
    CHECK(inner_product(psi, psi).real() == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(inner_product(psi, psi).imag() == doctest::Approx(0.0));

    auto z = basis_state(RegisterLayout::qubits(1), 0);
    auto o = basis_state(RegisterLayout::qubits(1), 1);
    CHECK(std::abs(inner_product(z, o)) == doctest::Approx(0.0));

    CHECK_THROWS_AS(inner_product(z, psi), ShapeError);
}

TEST_CASE("normalize") {
    auto v = normalize(std::vector<double>{1, 3, 0, 1});
    const double inv = 1.0 / std::sqrt(11.0);
    CHECK(v[0] == doctest::Approx(inv));
    CHECK(v[1] == doctest::Approx(3 * inv));
    CHECK(v[2] == doctest::Approx(0.0));

    auto p = normalize(std::vector<double>{0, 85, 170, 255});
    CHECK(p[1] == doctest::Approx(0.267).epsilon(5e-3));
    CHECK(p[2] == doctest::Approx(0.534).epsilon(5e-3));
    CHECK(p[3] == doctest::Approx(0.801).epsilon(5e-3));

    auto unit = normalize(std::vector<double>{0, 1});
    CHECK(unit[1] == doctest::Approx(1.0));

    CHECK_THROWS_AS(normalize(std::vector<double>{0, 0}), DegenerateInputError);
}
