// Command-line front end: ingest PGM/CSV/edge-list/JSON data, run the
// encoders, emit states as JSON and circuits as text, decode images back.

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qde/qde.hpp"

namespace {

void emit(const std::string& out_path, const std::string& content) {
    if (out_path.empty())
        std::cout << content;
    else
        qde::write_file(out_path, content);
}

void emit_state(const std::string& out_path, const qde::StateVector& s) {
    emit(out_path, qde::state_to_json(s).dump(2) + "\n");
}

void maybe_emit_circuit(const std::string& path, const std::optional<qde::Circuit>& c) {
    if (path.empty()) return;
    if (!c) throw qde::DomainError("this encoding method has no preparation circuit");
    qde::write_file(path, qde::circuit_to_text(*c));
}

std::vector<double> parse_weights(const std::string& spec) {
    std::vector<double> w;
    std::istringstream is(spec);
    std::string item;
    while (std::getline(is, item, ',')) w.push_back(std::stod(item));
    return w;
}

// rows = time steps, columns = channels; concatenation is channel-major.
std::vector<double> concat_timeseries(const std::vector<std::vector<double>>& rows) {
    if (rows.empty()) throw qde::FormatError("time series CSV holds no rows");
    const std::size_t channels = rows[0].size();
    for (const auto& r : rows)
        if (r.size() != channels) throw qde::FormatError("ragged time series rows");
    std::vector<double> v;
    v.reserve(rows.size() * channels);
    for (std::size_t c = 0; c < channels; ++c)
        for (const auto& r : rows) v.push_back(r[c]);
    return v;
}

struct Options {
    std::string out;
    std::string circuit_out;
    std::string unit = "radians";
    std::string method;
    std::string input;
    std::vector<std::string> inputs;
    std::string weights;
    std::uint64_t basis_value = 0;
    int bits = 0, int_bits = 0, frac_bits = 0;
    double angle = 0.0, fixed = 0.0;
    std::vector<double> complex_parts;
    std::uint64_t shots = 0;
    std::int64_t seed = -1;
};

int run(int argc, char** argv) {
    CLI::App app{"classical-to-quantum data encoding toolkit"};
    app.require_subcommand(1);
    Options o;

    // encode
    auto* encode = app.add_subcommand("encode", "encode data into a quantum state");
    encode->require_subcommand(1);

    auto* number = encode->add_subcommand("number", "encode a scalar value");
    auto* opt_basis = number->add_option("--basis", o.basis_value, "basis-encode an integer");
    number->add_option("--bits", o.bits, "qubit count for basis encoding");
    auto* opt_angle = number->add_option("--angle", o.angle, "angle-encode a real value");
    auto* opt_complex =
        number->add_option("--complex", o.complex_parts, "encode RE IM as a complex value")
            ->expected(2);
    auto* opt_fixed = number->add_option("--fixed", o.fixed, "fixed-point encode a rational");
    number->add_option("--int-bits", o.int_bits, "integer bits for fixed-point");
    number->add_option("--frac-bits", o.frac_bits, "fractional bits for fixed-point");
    number->add_option("--unit", o.unit, "degrees|radians (default radians)")
        ->check(CLI::IsMember({"degrees", "radians"}));
    number->add_option("-o,--out", o.out, "output state JSON path (default stdout)");

    auto* vec = encode->add_subcommand("vector", "encode a CSV vector");
    vec->add_option("--method", o.method, "angle|amplitude")
        ->required()
        ->check(CLI::IsMember({"angle", "amplitude"}));
    vec->add_option("file", o.input, "input CSV")->required();
    vec->add_option("--circuit", o.circuit_out, "write the preparation circuit here");
    vec->add_option("--unit", o.unit, "degrees|radians for angle method")
        ->check(CLI::IsMember({"degrees", "radians"}));
    vec->add_option("-o,--out", o.out, "output state JSON path");

    auto* image = encode->add_subcommand("image", "encode a PGM image");
    image->add_option("--method", o.method, "frqi|neqr|gneqr|qpie|brqi|qutrit-frqi|qutrit-neqr")
        ->required()
        ->check(CLI::IsMember(
            {"frqi", "neqr", "gneqr", "qpie", "brqi", "qutrit-frqi", "qutrit-neqr"}));
    image->add_option("file", o.input, "input PGM (plain P2)")->required();
    image->add_option("--circuit", o.circuit_out, "write the preparation circuit here");
    image->add_option("-o,--out", o.out, "output state JSON path");

    auto* ts = encode->add_subcommand("timeseries", "encode a multichannel time series CSV");
    ts->add_option("file", o.input, "input CSV, rows = time steps, columns = channels")
        ->required();
    ts->add_option("--circuit", o.circuit_out, "write the preparation circuit here");
    ts->add_option("-o,--out", o.out, "output state JSON path");

    auto* graph = encode->add_subcommand("graph", "encode an edge-list graph as a graph state");
    graph->add_option("file", o.input, "edge list: first line n, then `a b` or `a b w`")
        ->required();
    graph->add_option("-o,--out", o.out, "output state JSON path");

    // compose
    auto* compose = app.add_subcommand("compose", "combine encoded states");
    compose->require_subcommand(1);
    auto* product = compose->add_subcommand("product", "tensor product of state files");
    product->add_option("files", o.inputs, "state JSON files")->required()->expected(-1);
    product->add_option("-o,--out", o.out, "output state JSON path");
    auto* sum = compose->add_subcommand("sum", "tagged superposition of state files");
    sum->add_option("--weights", o.weights, "comma-separated branch probabilities");
    sum->add_option("files", o.inputs, "state JSON files")->required()->expected(-1);
    sum->add_option("-o,--out", o.out, "output state JSON path");

    // decode
    auto* decode = app.add_subcommand("decode", "decode a state back into data");
    decode->require_subcommand(1);
    auto* dimage = decode->add_subcommand("image", "decode an image state to PGM");
    dimage->add_option("--method", o.method, "neqr|frqi")
        ->required()
        ->check(CLI::IsMember({"neqr", "frqi"}));
    dimage->add_option("file", o.input, "state JSON")->required();
    dimage->add_option("--shots", o.shots, "sampled decode with this many shots / shot cap");
    dimage->add_option("--seed", o.seed, "sampling seed (required with --shots)");
    dimage->add_option("-o,--out", o.out, "output PGM path");

    // transform
    auto* transform = app.add_subcommand("transform", "apply a transform to a state");
    transform->require_subcommand(1);
    auto* qft2d = transform->add_subcommand("qft2d", "2D QFT of a QPIE state");
    qft2d->add_option("file", o.input, "state JSON")->required();
    qft2d->add_option("-o,--out", o.out, "output state JSON path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    const double unit_scale = (o.unit == "degrees") ? qde::kPi / 180.0 : 1.0;

    try {
        if (number->parsed()) {
            const int schemes = int(opt_basis->count() > 0) + int(opt_angle->count() > 0) +
                                int(opt_complex->count() > 0) + int(opt_fixed->count() > 0);
            if (schemes != 1) {
                std::cerr << "usage error: pick exactly one of --basis/--angle/--complex/--fixed\n";
                return 2;
            }
            qde::ScalarEncoding enc;
            if (opt_basis->count() > 0) {
                if (o.bits <= 0) {
                    std::cerr << "usage error: --basis requires --bits\n";
                    return 2;
                }
                enc = qde::encode_basis_integer(o.basis_value, o.bits);
            } else if (opt_angle->count() > 0) {
                enc = qde::encode_angle(o.angle * unit_scale);
            } else if (opt_complex->count() > 0) {
                enc = qde::encode_complex(qde::Complex(o.complex_parts[0] * unit_scale,
                                                       o.complex_parts[1] * unit_scale));
            } else {
                enc = qde::encode_fixed_point(o.fixed, o.int_bits, o.frac_bits);
            }
            emit_state(o.out, enc.state);
        } else if (vec->parsed()) {
            std::vector<double> v = qde::csv_vector(qde::read_file(o.input));
            if (o.method == "angle") {
                for (double& x : v) x *= unit_scale;
                qde::EncodingResult r = qde::encode_angle_vector(v);
                maybe_emit_circuit(o.circuit_out, r.circuit);
                emit_state(o.out, r.state);
            } else {
                qde::EncodingResult r = qde::encode_amplitude(v);
                if (!o.circuit_out.empty())
                    r.circuit = qde::prep_circuit_from_tree(qde::build_prep_tree(v));
                maybe_emit_circuit(o.circuit_out, r.circuit);
                emit_state(o.out, r.state);
            }
        } else if (image->parsed()) {
            const qde::Image img = qde::parse_pgm(qde::read_file(o.input));
            qde::EncodingResult r;
            if (o.method == "frqi") {
                r = qde::frqi_encode(img);
                if (!o.circuit_out.empty()) r.circuit = qde::frqi_prep_circuit(img);
            } else if (o.method == "neqr") {
                r = qde::neqr_encode(img);
            } else if (o.method == "gneqr") {
                r = qde::gneqr_encode(img);
            } else if (o.method == "qpie") {
                r = qde::qpie_encode(img);
                if (!o.circuit_out.empty()) {
                    std::vector<double> flat(img.pixels.begin(), img.pixels.end());
                    r.circuit = qde::prep_circuit_from_tree(qde::build_prep_tree(flat));
                }
            } else if (o.method == "brqi") {
                r = qde::brqi_encode(img);
            } else if (o.method == "qutrit-frqi") {
                r = qde::qutrit_frqi_encode(img);
            } else {
                r = qde::qutrit_neqr_encode(img);
            }
            maybe_emit_circuit(o.circuit_out, r.circuit);
            emit_state(o.out, r.state);
        } else if (ts->parsed()) {
            const auto rows = qde::parse_csv(qde::read_file(o.input));
            const std::vector<double> v = concat_timeseries(rows);
            qde::EncodingResult r = qde::encode_amplitude(v);
            if (!o.circuit_out.empty())
                r.circuit = qde::prep_circuit_from_tree(qde::build_prep_tree(v));
            maybe_emit_circuit(o.circuit_out, r.circuit);
            emit_state(o.out, r.state);
        } else if (graph->parsed()) {
            emit_state(o.out, qde::graph_state(qde::parse_edge_list(qde::read_file(o.input))).state);
        } else if (product->parsed()) {
            std::vector<qde::StateVector> parts;
            for (const auto& path : o.inputs) parts.push_back(qde::load_state(path));
            emit_state(o.out, qde::product_encode(parts).state);
        } else if (sum->parsed()) {
            std::vector<qde::StateVector> parts;
            for (const auto& path : o.inputs) parts.push_back(qde::load_state(path));
            std::vector<double> weights;
            if (!o.weights.empty()) weights = parse_weights(o.weights);
            emit_state(o.out, qde::sum_encode(parts, weights).state);
        } else if (dimage->parsed()) {
            if (o.shots > 0 && o.seed < 0) {
                std::cerr << "usage error: --shots requires --seed\n";
                return 2;
            }
            const qde::StateVector state = qde::load_state(o.input);
            qde::Image img;
            if (o.method == "neqr") {
                img = (o.shots > 0)
                          ? qde::neqr_decode_sampled(state, std::uint64_t(o.seed), o.shots).first
                          : qde::neqr_decode_exact(state);
            } else {
                img = (o.shots > 0)
                          ? qde::frqi_decode_sampled(state, o.shots, std::uint64_t(o.seed))
                          : qde::frqi_decode_exact(state);
            }
            emit(o.out, qde::format_pgm(img));
        } else if (qft2d->parsed()) {
            emit_state(o.out, qde::qpie_qft2d(qde::load_state(o.input)));
        }
    } catch (const qde::Error& e) {
        std::cerr << e.kind() << ": " << e.what() << "\n";
        return 1;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
