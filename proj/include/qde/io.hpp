#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "qde/graph.hpp"
#include "qde/image.hpp"
#include "qde/statevec.hpp"

namespace qde {

// --- JSON state format ------------------------------------------------------
// {"local_dims":[...],"labels":[...],"amplitudes":[[re,im],...]} with
// amplitudes in increasing basis-index order.

inline nlohmann::json state_to_json(const StateVector& s) {
    nlohmann::json j;
    j["local_dims"] = s.layout.local_dims;
    j["labels"] = s.layout.labels;
    nlohmann::json amps = nlohmann::json::array();
    for (const auto& a : s.amps) amps.push_back({a.real(), a.imag()});
    j["amplitudes"] = std::move(amps);
    return j;
}

inline StateVector state_from_json(const nlohmann::json& j) {
    try {
        RegisterLayout layout(j.at("local_dims").get<std::vector<int>>(),
                              j.at("labels").get<std::vector<std::string>>());
        std::vector<Complex> amps;
        for (const auto& pair : j.at("amplitudes"))
            amps.emplace_back(pair.at(0).get<double>(), pair.at(1).get<double>());
        return StateVector(std::move(layout), std::move(amps));
    } catch (const nlohmann::json::exception& e) {
        throw FormatError(std::string("malformed state JSON: ") + e.what());
    }
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot read file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot write file '" + path + "'");
    out << content;
}

inline StateVector load_state(const std::string& path) {
    try {
        return state_from_json(nlohmann::json::parse(read_file(path)));
    } catch (const nlohmann::json::exception& e) {
        throw FormatError(std::string("malformed state JSON: ") + e.what());
    }
}

// --- PGM (plain ASCII P2, maxval 255 or 1) ----------------------------------

namespace detail {

// Token stream that skips '#' comments.
inline std::vector<std::string> pgm_tokens(const std::string& text) {
    std::vector<std::string> toks;
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        std::istringstream ls(line);
        std::string tok;
        while (ls >> tok) toks.push_back(tok);
    }
    return toks;
}

}  // namespace detail

inline Image parse_pgm(const std::string& text) {
    const auto toks = detail::pgm_tokens(text);
    if (toks.size() < 4 || toks[0] != "P2") throw FormatError("expected plain PGM (P2) input");
    int w, h, maxval;
    try {
        w = std::stoi(toks[1]);
        h = std::stoi(toks[2]);
        maxval = std::stoi(toks[3]);
    } catch (const std::exception&) {
        throw FormatError("malformed PGM header");
    }
    if (maxval != 255 && maxval != 1)
        throw FormatError("PGM maxval must be 255 (8-bit) or 1 (binary)");
    if (w <= 0 || h <= 0) throw FormatError("PGM dimensions must be positive");
    if (toks.size() != 4 + std::size_t(w) * h) throw FormatError("PGM pixel count mismatch");
    std::vector<int> px(std::size_t(w) * h);
    for (std::size_t i = 0; i < px.size(); ++i) {
        try {
            px[i] = std::stoi(toks[4 + i]);
        } catch (const std::exception&) {
            throw FormatError("malformed PGM pixel value");
        }
        if (px[i] < 0 || px[i] > maxval) throw FormatError("PGM pixel value out of range");
    }
    return Image(w, h, maxval == 255 ? 8 : 1, std::move(px));
}

inline std::string format_pgm(const Image& img) {
    std::ostringstream os;
    os << "P2\n" << img.width << " " << img.height << "\n" << img.max_value() << "\n";
    for (int y = 0; y < img.height; ++y) {
        for (int x = 0; x < img.width; ++x) {
            if (x) os << " ";
            os << img.at(y, x);
        }
        os << "\n";
    }
    return os.str();
}

// --- CSV (comma-separated, '#' comments) ------------------------------------

inline std::vector<std::vector<double>> parse_csv(const std::string& text) {
    std::vector<std::vector<double>> rows;
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        std::vector<double> row;
        std::istringstream ls(line);
        std::string cell;
        while (std::getline(ls, cell, ',')) {
            std::istringstream cs(cell);
            double v;
            if (cs >> v)
                row.push_back(v);
            else if (!cell.empty() && cell.find_first_not_of(" \t\r") != std::string::npos)
                throw FormatError("malformed CSV cell '" + cell + "'");
        }
        if (!row.empty()) rows.push_back(std::move(row));
    }
    return rows;
}

// Flattens a single-row or single-column CSV into a vector.
inline std::vector<double> csv_vector(const std::string& text) {
    const auto rows = parse_csv(text);
    std::vector<double> v;
    for (const auto& row : rows) v.insert(v.end(), row.begin(), row.end());
    if (v.empty()) throw FormatError("CSV holds no values");
    return v;
}

// --- edge list: line 1 `n`, then `a b` or `a b w`; 1-based vertex ids -------

inline Graph parse_edge_list(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    Graph g;
    bool have_n = false;
    while (std::getline(is, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        std::istringstream ls(line);
        if (!have_n) {
            if (ls >> g.n_vertices) have_n = true;
            continue;
        }
        std::vector<std::string> toks;
        std::string tok;
        while (ls >> tok) toks.push_back(tok);
        if (toks.empty()) continue;
        if (toks.size() < 2 || toks.size() > 3) throw FormatError("malformed edge line: " + line);
        Graph::Edge e{0, 0, std::nullopt};
        try {
            e.a = std::stoi(toks[0]) - 1;
            e.b = std::stoi(toks[1]) - 1;
            if (toks.size() == 3) e.weight = std::stod(toks[2]);
        } catch (const std::exception&) {
            throw FormatError("malformed edge line: " + line);
        }
        g.edges.push_back(e);
    }
    if (!have_n) throw FormatError("edge list is missing the vertex count");
    g.validate();
    return g;
}

}  // namespace qde
