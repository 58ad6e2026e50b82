#include <doctest.h>

#include <random>

#include "helpers.hpp"

using namespace qde;

TEST_CASE("state JSON round-trips bit-exactly") {
    std::mt19937 rng(127);
    auto psi = testutil::random_qubit_state(3, rng);
    psi.layout.labels = {"a", "b", "c"};
    auto back = state_from_json(state_to_json(psi));
    CHECK(back.layout.local_dims == psi.layout.local_dims);
    CHECK(back.layout.labels == psi.layout.labels);
    REQUIRE(back.amps.size() == psi.amps.size());
    for (std::size_t i = 0; i < psi.amps.size(); ++i) CHECK(back.amps[i] == psi.amps[i]);
}

TEST_CASE("state JSON round-trips qutrit layouts") {
    auto t = basis_state(RegisterLayout::qutrits(2), 5);
    auto back = state_from_json(state_to_json(t));
    CHECK(back.layout.local_dims == std::vector<int>{3, 3});
    CHECK(back.amps[5].real() == doctest::Approx(1.0));
}

TEST_CASE("malformed state JSON is rejected") {
    CHECK_THROWS_AS(state_from_json(nlohmann::json::object()), FormatError);
    nlohmann::json j;
    j["local_dims"] = {2};
    j["labels"] = {"q"};
    j["amplitudes"] = {{1.0}};  // missing imaginary part
    CHECK_THROWS_AS(state_from_json(j), FormatError);
}

TEST_CASE("PGM parse golden") {
    const std::string pgm =
        "P2\n"
        "# the standard test grid\n"
        "2 2\n"
        "255\n"
        "0 85\n"
        "170 255\n";
    auto img = parse_pgm(pgm);
    CHECK(img == testutil::test_image_2x2());
}

TEST_CASE("PGM binary maxval and formatting round-trip") {
    auto bin = parse_pgm("P2\n2 2\n1\n0 1\n1 0\n");
    CHECK(bin.depth == 1);
    CHECK(bin.pixels == std::vector<int>{0, 1, 1, 0});

    for (const Image& img : {testutil::test_image_2x2(), bin}) {
        CHECK(parse_pgm(format_pgm(img)) == img);
    }
}

TEST_CASE("PGM rejects malformed input") {
    CHECK_THROWS_AS(parse_pgm("P5\n2 2\n255\n0 0 0 0\n"), FormatError);
    CHECK_THROWS_AS(parse_pgm("P2\n2 2\n16\n0 0 0 0\n"), FormatError);
    CHECK_THROWS_AS(parse_pgm("P2\n2 2\n255\n0 0 0\n"), FormatError);
    CHECK_THROWS_AS(parse_pgm("P2\n2 2\n255\n0 0 0 300\n"), FormatError);
    CHECK_THROWS_AS(parse_pgm("P2\n0 2\n255\n"), FormatError);
    CHECK_THROWS_AS(parse_pgm(""), FormatError);
}

TEST_CASE("CSV parsing") {
    auto rows = parse_csv("1,2,3\n4,5,6\n");
    REQUIRE(rows.size() == 2);
    CHECK(rows[0] == std::vector<double>{1, 2, 3});
    CHECK(rows[1] == std::vector<double>{4, 5, 6});

    // comments, blank lines and a single column
    auto col = parse_csv("# header\n0.5\n\n0.3\n");
    REQUIRE(col.size() == 2);
    CHECK(col[0][0] == 0.5);
    CHECK(col[1][0] == 0.3);

    CHECK(csv_vector("1,2\n3,4\n") == std::vector<double>{1, 2, 3, 4});
    CHECK_THROWS_AS(csv_vector("# nothing\n"), FormatError);
    CHECK_THROWS_AS(parse_csv("1,two,3\n"), FormatError);
}

TEST_CASE("edge list parsing") {
    auto g = parse_edge_list("3\n1 2\n2 3 0.5\n");
    CHECK(g.n_vertices == 3);
    REQUIRE(g.edges.size() == 2);
    CHECK(g.edges[0].a == 0);
    CHECK(g.edges[0].b == 1);
    CHECK_FALSE(g.edges[0].weight);
    CHECK(g.edges[1].a == 1);
    CHECK(g.edges[1].b == 2);
    CHECK(g.edges[1].weight == 0.5);

    auto lone = parse_edge_list("2\n# no edges\n");
    CHECK(lone.n_vertices == 2);
    CHECK(lone.edges.empty());
}

TEST_CASE("edge list rejects malformed input") {
    CHECK_THROWS_AS(parse_edge_list(""), FormatError);
    CHECK_THROWS_AS(parse_edge_list("# only comments\n"), FormatError);
    CHECK_THROWS_AS(parse_edge_list("3\n1\n"), FormatError);
    CHECK_THROWS_AS(parse_edge_list("3\n1 4\n"), GraphFormatError);
    CHECK_THROWS_AS(parse_edge_list("3\n1 1\n"), GraphFormatError);
    CHECK_THROWS_AS(parse_edge_list("3\n1 2\n2 1\n"), GraphFormatError);
}

TEST_CASE("read_file errors on a missing path") {
    CHECK_THROWS_AS(read_file("/nonexistent/definitely/missing.txt"), IoError);
    CHECK_THROWS_AS(load_state("/nonexistent/definitely/missing.json"), IoError);
}

TEST_CASE("write then read a state file") {
    std::mt19937 rng(131);
    auto psi = testutil::random_qubit_state(2, rng);
    const std::string path = "io_roundtrip_state.json";
    write_file(path, state_to_json(psi).dump());
    auto back = load_state(path);
    CHECK(testutil::max_abs_diff(back.amps, psi.amps) == 0.0);
    std::remove(path.c_str());
}

TEST_CASE("load_state rejects invalid JSON text") {
    const std::string path = "io_bad_state.json";
    write_file(path, "{not json");
    CHECK_THROWS_AS(load_state(path), FormatError);
    std::remove(path.c_str());
}
