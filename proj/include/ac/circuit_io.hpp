#pragma once

#include <cstdint>
#include <istream>
#include <sstream>
#include <string>
#include <vector>

#include "circuit.hpp"
#include "errors.hpp"

namespace ac {

namespace detail {

inline std::vector<std::string> split_tokens(const std::string& line) {
    std::vector<std::string> out;
    std::istringstream in(line);
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
}

inline int parse_positive(const std::string& s, int line_no, const char* what) {
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
        throw parse_error("line " + std::to_string(line_no) + ": bad " + what +
                          " '" + s + "'");
    long v = std::stol(s);
    if (v < 1 || v > 1'000'000)
        throw parse_error("line " + std::to_string(line_no) + ": " + what +
                          " out of range");
    return static_cast<int>(v);
}

inline std::string chomp(std::string line) {
    while (!line.empty() && (line.back() == '\r' || line.back() == '\n'))
        line.pop_back();
    return line;
}

}  // namespace detail

// Text format, line oriented:
//
//   ac-circuit v1
//   inputs <n>
//   gate <k> wires x<i>... g<j>...
//   support <bitstring>          (one line per support tuple, sorted)
//   endgate
//
// Gates appear in ascending index order; a support bitstring's i-th
// character belongs to the gate's i-th wire.  Parsing is purely syntactic:
// range and ordering problems are left for Circuit::validate to report.
inline Circuit parse_circuit(std::istream& in) {
    std::string line;
    int line_no = 0;
    auto next_line = [&](std::vector<std::string>& toks) -> bool {
        while (std::getline(in, line)) {
            ++line_no;
            toks = detail::split_tokens(detail::chomp(line));
            if (!toks.empty()) return true;
        }
        return false;
    };

    std::vector<std::string> toks;
    if (!next_line(toks) || toks.size() != 2 || toks[0] != "ac-circuit" || toks[1] != "v1")
        throw parse_error("line " + std::to_string(line_no) + ": expected 'ac-circuit v1' header");
    if (!next_line(toks) || toks.size() != 2 || toks[0] != "inputs")
        throw parse_error("line " + std::to_string(line_no) + ": expected 'inputs <n>'");
    int inputs = detail::parse_positive(toks[1], line_no, "input count");
    if (inputs > BitTuple::max_width)
        throw parse_error("line " + std::to_string(line_no) + ": too many inputs");

    std::vector<Gate> gates;
    while (next_line(toks)) {
        if (toks[0] != "gate" || toks.size() < 3 || toks[2] != "wires")
            throw parse_error("line " + std::to_string(line_no) +
                              ": expected 'gate <k> wires ...'");
        int idx = detail::parse_positive(toks[1], line_no, "gate index");
        if (idx != static_cast<int>(gates.size()) + 1)
            throw parse_error("line " + std::to_string(line_no) +
                              ": gate index out of order");
        Gate gate;
        for (std::size_t i = 3; i < toks.size(); ++i) {
            const std::string& t = toks[i];
            if (t.size() < 2 || (t[0] != 'x' && t[0] != 'g'))
                throw parse_error("line " + std::to_string(line_no) + ": bad wire '" + t + "'");
            int ref = detail::parse_positive(t.substr(1), line_no, "wire index");
            gate.wires.push_back(t[0] == 'x' ? input_wire(ref - 1) : gate_wire(ref - 1));
        }
        int arity = -1;
        bool closed = false;
        while (next_line(toks)) {
            if (toks[0] == "endgate") {
                if (toks.size() != 1)
                    throw parse_error("line " + std::to_string(line_no) + ": bad endgate");
                closed = true;
                break;
            }
            if (toks[0] != "support" || toks.size() > 2)
                throw parse_error("line " + std::to_string(line_no) +
                                  ": expected 'support <bitstring>' or 'endgate'");
            std::string bits = toks.size() == 2 ? toks[1] : std::string();
            BitTuple t = [&] {
                try {
                    return BitTuple::from_string(bits);
                } catch (const error& e) {
                    throw parse_error("line " + std::to_string(line_no) + ": " + e.what());
                }
            }();
            if (arity == -1)
                arity = t.width();
            else if (arity != t.width())
                throw parse_error("line " + std::to_string(line_no) +
                                  ": support width differs from previous lines");
            gate.table.support.push_back(t.key());
        }
        if (!closed)
            throw parse_error("line " + std::to_string(line_no) + ": missing endgate");
        gate.table.arity = arity == -1 ? static_cast<int>(gate.wires.size()) : arity;
        std::sort(gate.table.support.begin(), gate.table.support.end());
        gates.push_back(std::move(gate));
    }
    return Circuit(inputs, std::move(gates));
}

inline Circuit parse_circuit(const std::string& text) {
    std::istringstream in(text);
    return parse_circuit(in);
}

inline std::string serialize_circuit(const Circuit& c) {
    std::ostringstream out;
    out << "ac-circuit v1\n";
    out << "inputs " << c.inputs() << "\n";
    for (int g = 0; g < c.gate_count(); ++g) {
        const Gate& gate = c.gate(g);
        out << "gate " << (g + 1) << " wires";
        for (const Wire& w : gate.wires)
            out << ' ' << (w.kind == Wire::Kind::input ? 'x' : 'g') << (w.index + 1);
        out << "\n";
        for (std::uint32_t k : gate.table.support) {
            BitTuple t(gate.table.arity, k);
            if (t.width() == 0)
                out << "support\n";
            else
                out << "support " << t.to_string() << "\n";
        }
        out << "endgate\n";
    }
    return out.str();
}

}  // namespace ac
