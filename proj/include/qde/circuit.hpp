#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "qde/statevec.hpp"

namespace qde {

// Gate matrix conventions:
//   RY(t)    = [[cos(t/2), -sin(t/2)], [sin(t/2), cos(t/2)]]
//   RZ(p)    = diag(e^{-ip/2}, e^{ip/2})
//   Phase(p) = diag(1, e^{ip})
//   CZ       = diag(1,1,1,-1)
//   QFT      = unitary DFT (1/sqrt(N) factor) on the listed qubit subset,
//              most-significant-first bit order within the subset.
struct Gate {
    enum class Kind { X, H, RY, RZ, Phase, CZ, MCRY, QFT };

    Kind kind;
    int target = -1;                            // X,H,RY,RZ,Phase,MCRY
    int control = -1;                           // CZ control (target holds the other qubit)
    std::vector<std::pair<int, int>> controls;  // MCRY: (qubit, polarity)
    std::vector<int> qubits;                    // QFT subset
    double angle = 0.0;

    static Gate x(int q) { return {Kind::X, q}; }
    static Gate h(int q) { return {Kind::H, q}; }
    static Gate ry(int q, double theta) {
        Gate g{Kind::RY, q};
        g.angle = theta;
        return g;
    }
    static Gate rz(int q, double phi) {
        Gate g{Kind::RZ, q};
        g.angle = phi;
        return g;
    }
    static Gate phase(int q, double phi) {
        Gate g{Kind::Phase, q};
        g.angle = phi;
        return g;
    }
    static Gate cz(int a, int b) {
        Gate g{Kind::CZ, b};
        g.control = a;
        return g;
    }
    static Gate mcry(std::vector<std::pair<int, int>> ctrls, int t, double theta) {
        Gate g{Kind::MCRY, t};
        g.controls = std::move(ctrls);
        g.angle = theta;
        return g;
    }
    static Gate qft(std::vector<int> qs) {
        Gate g{Kind::QFT};
        g.qubits = std::move(qs);
        return g;
    }
};

struct Circuit {
    int n_qubits = 0;
    std::vector<Gate> gates;

    Circuit() = default;
    explicit Circuit(int n) : n_qubits(n) {}

    void append(Gate g) { gates.push_back(std::move(g)); }
    void append(const Circuit& c) {
        gates.insert(gates.end(), c.gates.begin(), c.gates.end());
    }
};

struct ShotRecord {
    std::size_t outcome;
    std::uint64_t count;
};

namespace detail {

inline void check_qubit(int q, int n) {
    if (q < 0 || q >= n) throw ShapeError("qubit index out of register bounds");
}

// Qubit 0 is the leftmost tensor factor, so its bit sits at position n-1.
inline int bit_pos(int qubit, int n) { return n - 1 - qubit; }

inline void apply_1q(std::vector<Complex>& a, int n, int qubit, const Complex m[2][2]) {
    const std::size_t stride = std::size_t(1) << bit_pos(qubit, n);
    const std::size_t dim = a.size();
    for (std::size_t base = 0; base < dim; base += 2 * stride) {
        for (std::size_t off = 0; off < stride; ++off) {
            const std::size_t i0 = base + off;
            const std::size_t i1 = i0 + stride;
            const Complex a0 = a[i0], a1 = a[i1];
            a[i0] = m[0][0] * a0 + m[0][1] * a1;
            a[i1] = m[1][0] * a0 + m[1][1] * a1;
        }
    }
}

inline std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

// Per-shot substream: a pure hash of (seed, shot index), so results do not
// depend on how shots are distributed over workers.
inline double shot_uniform(std::uint64_t seed, std::uint64_t shot) {
    std::uint64_t z = mix64(seed + 0x9E3779B97F4A7C15ULL) ^ mix64(shot * 0xD1B54A32D192ED03ULL + 0x2545F4914F6CDD1DULL);
    return static_cast<double>(mix64(z) >> 11) * 0x1.0p-53;
}

}  // namespace detail

inline void apply_gate_in_place(std::vector<Complex>& a, int n, const Gate& g) {
    using K = Gate::Kind;
    switch (g.kind) {
        case K::X: {
            detail::check_qubit(g.target, n);
            const Complex m[2][2] = {{0, 1}, {1, 0}};
            detail::apply_1q(a, n, g.target, m);
            break;
        }
        case K::H: {
            detail::check_qubit(g.target, n);
            const double s = 1.0 / std::sqrt(2.0);
            const Complex m[2][2] = {{s, s}, {s, -s}};
            detail::apply_1q(a, n, g.target, m);
            break;
        }
        case K::RY: {
            detail::check_qubit(g.target, n);
            const double c = std::cos(g.angle / 2), s = std::sin(g.angle / 2);
            const Complex m[2][2] = {{c, -s}, {s, c}};
            detail::apply_1q(a, n, g.target, m);
            break;
        }
        case K::RZ: {
            detail::check_qubit(g.target, n);
            const Complex m[2][2] = {{std::polar(1.0, -g.angle / 2), 0},
                                     {0, std::polar(1.0, g.angle / 2)}};
            detail::apply_1q(a, n, g.target, m);
            break;
        }
        case K::Phase: {
            detail::check_qubit(g.target, n);
            const Complex m[2][2] = {{1, 0}, {0, std::polar(1.0, g.angle)}};
            detail::apply_1q(a, n, g.target, m);
            break;
        }
        case K::CZ: {
            detail::check_qubit(g.control, n);
            detail::check_qubit(g.target, n);
            if (g.control == g.target) throw ShapeError("CZ control equals target");
            const std::size_t ma = std::size_t(1) << detail::bit_pos(g.control, n);
            const std::size_t mb = std::size_t(1) << detail::bit_pos(g.target, n);
            for (std::size_t i = 0; i < a.size(); ++i)
                if ((i & ma) && (i & mb)) a[i] = -a[i];
            break;
        }
        case K::MCRY: {
            detail::check_qubit(g.target, n);
            std::size_t match_mask = 0, match_val = 0;
            for (auto [q, pol] : g.controls) {
                detail::check_qubit(q, n);
                if (q == g.target) throw ShapeError("MCRY target overlaps a control");
                const std::size_t m = std::size_t(1) << detail::bit_pos(q, n);
                if (match_mask & m) throw ShapeError("MCRY duplicate control qubit");
                match_mask |= m;
                if (pol) match_val |= m;
            }
            const std::size_t tmask = std::size_t(1) << detail::bit_pos(g.target, n);
            const double c = std::cos(g.angle / 2), s = std::sin(g.angle / 2);
            for (std::size_t i = 0; i < a.size(); ++i) {
                if ((i & tmask) || (i & match_mask) != match_val) continue;
                const std::size_t j = i | tmask;
                const Complex a0 = a[i], a1 = a[j];
                a[i] = c * a0 - s * a1;
                a[j] = s * a0 + c * a1;
            }
            break;
        }
        case K::QFT: {
            const int k = static_cast<int>(g.qubits.size());
            if (k == 0) break;
            std::vector<std::size_t> masks(k);
            std::size_t submask = 0;
            for (int j = 0; j < k; ++j) {
                detail::check_qubit(g.qubits[j], n);
                masks[j] = std::size_t(1) << detail::bit_pos(g.qubits[j], n);
                if (submask & masks[j]) throw ShapeError("QFT duplicate qubit");
                submask |= masks[j];
            }
            const std::size_t sub_dim = std::size_t(1) << k;
            std::vector<Complex> dft(sub_dim * sub_dim);
            for (std::size_t r = 0; r < sub_dim; ++r)
                for (std::size_t cix = 0; cix < sub_dim; ++cix)
                    dft[r * sub_dim + cix] =
                        std::polar(1.0 / std::sqrt(double(sub_dim)),
                                   2.0 * kPi * double(r * cix) / double(sub_dim));
            std::vector<std::size_t> scatter(sub_dim);
            std::vector<Complex> buf(sub_dim);
            for (std::size_t base = 0; base < a.size(); ++base) {
                if (base & submask) continue;  // enumerate fixed bits once
                for (std::size_t s = 0; s < sub_dim; ++s) {
                    std::size_t idx = base;
                    for (int j = 0; j < k; ++j)
                        if (s & (std::size_t(1) << (k - 1 - j))) idx |= masks[j];
                    scatter[s] = idx;
                }
                for (std::size_t r = 0; r < sub_dim; ++r) {
                    Complex acc(0.0, 0.0);
                    for (std::size_t s = 0; s < sub_dim; ++s)
                        acc += dft[r * sub_dim + s] * a[scatter[s]];
                    buf[r] = acc;
                }
                for (std::size_t r = 0; r < sub_dim; ++r) a[scatter[r]] = buf[r];
            }
            break;
        }
    }
}

inline StateVector simulate(const Circuit& c, const StateVector& initial) {
    if (!initial.layout.all_qubits())
        throw UnsupportedRegisterError("circuit simulation requires a qubit register");
    if (static_cast<int>(initial.layout.size()) != c.n_qubits)
        throw ShapeError("circuit width does not match the register");
    StateVector s = initial;
    for (const Gate& g : c.gates) apply_gate_in_place(s.amps, c.n_qubits, g);
    return s;
}

inline StateVector apply_mcry(const StateVector& state,
                              const std::vector<std::pair<int, int>>& controls, int target,
                              double theta) {
    if (!state.layout.all_qubits())
        throw UnsupportedRegisterError("MCRY requires a qubit register");
    StateVector s = state;
    apply_gate_in_place(s.amps, static_cast<int>(s.layout.size()),
                        Gate::mcry(controls, target, theta));
    return s;
}

// Draws a single outcome from the per-shot substream of (seed, shot).
inline std::size_t sample_one(const std::vector<double>& cumulative, std::uint64_t seed,
                              std::uint64_t shot) {
    const double u = detail::shot_uniform(seed, shot);
    auto it = std::upper_bound(cumulative.begin(), cumulative.end(), u);
    std::size_t i = static_cast<std::size_t>(it - cumulative.begin());
    return std::min(i, cumulative.size() - 1);
}

inline std::vector<double> cumulative_probabilities(const StateVector& state) {
    std::vector<double> cum(state.dim());
    double acc = 0.0;
    for (std::size_t i = 0; i < state.dim(); ++i) {
        acc += std::norm(state.amps[i]);
        cum[i] = acc;
    }
    // guard against rounding drift at the top end
    if (!cum.empty()) cum.back() = std::max(cum.back(), 1.0);
    return cum;
}

inline std::vector<ShotRecord> sample(const StateVector& state, std::uint64_t shots,
                                      std::uint64_t seed) {
    std::vector<ShotRecord> records;
    if (shots == 0) return records;
    const std::vector<double> cum = cumulative_probabilities(state);
    std::map<std::size_t, std::uint64_t> counts;
    for (std::uint64_t t = 0; t < shots; ++t) ++counts[sample_one(cum, seed, t)];
    records.reserve(counts.size());
    for (auto [outcome, count] : counts) records.push_back({outcome, count});
    return records;
}

// --- circuit text format ----------------------------------------------------
// One gate per line: `H q0`, `X q2`, `RY q1 1.0471975512`, `P q0 0.46364761`,
// `RZ q0 0.5`, `CZ q0 q1`, `MCRY [q0=1,q1=0] q2 0.9272952180`, `QFT q0 q1`.

inline std::string format_angle(double a) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", a);
    return buf;
}

inline std::string circuit_to_text(const Circuit& c) {
    std::ostringstream os;
    os << "# qubits " << c.n_qubits << "\n";
    for (const Gate& g : c.gates) {
        using K = Gate::Kind;
        switch (g.kind) {
            case K::X: os << "X q" << g.target << "\n"; break;
            case K::H: os << "H q" << g.target << "\n"; break;
            case K::RY: os << "RY q" << g.target << " " << format_angle(g.angle) << "\n"; break;
            case K::RZ: os << "RZ q" << g.target << " " << format_angle(g.angle) << "\n"; break;
            case K::Phase: os << "P q" << g.target << " " << format_angle(g.angle) << "\n"; break;
            case K::CZ: os << "CZ q" << g.control << " q" << g.target << "\n"; break;
            case K::MCRY: {
                os << "MCRY [";
                for (std::size_t i = 0; i < g.controls.size(); ++i) {
                    if (i) os << ",";
                    os << "q" << g.controls[i].first << "=" << g.controls[i].second;
                }
                os << "] q" << g.target << " " << format_angle(g.angle) << "\n";
                break;
            }
            case K::QFT: {
                os << "QFT";
                for (int q : g.qubits) os << " q" << q;
                os << "\n";
                break;
            }
        }
    }
    return os.str();
}

namespace detail {

inline int parse_qubit_token(const std::string& tok) {
    if (tok.size() < 2 || tok[0] != 'q') throw FormatError("expected qubit token, got '" + tok + "'");
    try {
        return std::stoi(tok.substr(1));
    } catch (const std::exception&) {
        throw FormatError("bad qubit token '" + tok + "'");
    }
}

}  // namespace detail

inline Circuit circuit_from_text(const std::string& text) {
    Circuit c;
    int max_qubit = -1;
    std::istringstream is(text);
    std::string line;
    auto note = [&](int q) { max_qubit = std::max(max_qubit, q); };
    while (std::getline(is, line)) {
        std::istringstream ls(line);
        std::string op;
        if (!(ls >> op)) continue;
        if (op == "#") {
            std::string word;
            if (ls >> word && word == "qubits") {
                int n;
                if (ls >> n) c.n_qubits = n;
            }
            continue;
        }
        if (op == "X" || op == "H") {
            std::string q;
            ls >> q;
            int t = detail::parse_qubit_token(q);
            note(t);
            c.append(op == "X" ? Gate::x(t) : Gate::h(t));
        } else if (op == "RY" || op == "RZ" || op == "P") {
            std::string q;
            double a;
            if (!(ls >> q >> a)) throw FormatError("malformed gate line: " + line);
            int t = detail::parse_qubit_token(q);
            note(t);
            c.append(op == "RY" ? Gate::ry(t, a) : op == "RZ" ? Gate::rz(t, a) : Gate::phase(t, a));
        } else if (op == "CZ") {
            std::string qa, qb;
            if (!(ls >> qa >> qb)) throw FormatError("malformed CZ line: " + line);
            int a = detail::parse_qubit_token(qa), b = detail::parse_qubit_token(qb);
            note(a);
            note(b);
            c.append(Gate::cz(a, b));
        } else if (op == "MCRY") {
            std::string ctrls, q;
            double a;
            if (!(ls >> ctrls >> q >> a)) throw FormatError("malformed MCRY line: " + line);
            if (ctrls.size() < 2 || ctrls.front() != '[' || ctrls.back() != ']')
                throw FormatError("malformed MCRY controls: " + ctrls);
            std::vector<std::pair<int, int>> controls;
            std::string inner = ctrls.substr(1, ctrls.size() - 2);
            std::istringstream cs(inner);
            std::string item;
            while (std::getline(cs, item, ',')) {
                auto eq = item.find('=');
                if (eq == std::string::npos) throw FormatError("malformed MCRY control: " + item);
                int cq = detail::parse_qubit_token(item.substr(0, eq));
                int pol = std::stoi(item.substr(eq + 1));
                note(cq);
                controls.emplace_back(cq, pol);
            }
            int t = detail::parse_qubit_token(q);
            note(t);
            c.append(Gate::mcry(std::move(controls), t, a));
        } else if (op == "QFT") {
            std::vector<int> qs;
            std::string q;
            while (ls >> q) {
                int t = detail::parse_qubit_token(q);
                note(t);
                qs.push_back(t);
            }
            c.append(Gate::qft(std::move(qs)));
        } else {
            throw FormatError("unknown gate '" + op + "'");
        }
    }
    if (c.n_qubits == 0) c.n_qubits = max_qubit + 1;
    return c;
}

}  // namespace qde
