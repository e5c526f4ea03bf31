#pragma once

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "circuit.hpp"
#include "circuit_io.hpp"
#include "cube.hpp"
#include "errors.hpp"
#include "truth_table.hpp"

namespace ac {

enum class TargetFunction { parity, majority };

inline const char* target_name(TargetFunction f) {
    return f == TargetFunction::parity ? "parity" : "majority";
}

inline TruthTable target_table(TargetFunction f, int n) {
    return f == TargetFunction::parity ? TruthTable::parity(n)
                                       : TruthTable::majority(n);
}

// A lower-bound certificate for one circuit: a chain of n+1 tuples, one per
// weight, with some tuples charging a gate of the circuit.  A certificate
// checks out when every charged gate evaluates to 1 on its tuple, no gate
// is charged twice, and the charges cover one side of the target function's
// critical layers.  Injectivity alone then forces the circuit to have at
// least `claimed_bound` gates.
struct ChainCertificate {
    int n = 0;
    TargetFunction function = TargetFunction::parity;
    int claimed_bound = 0;
    std::vector<BitTuple> tuples;             // ascending weight, n+1 entries
    std::vector<std::optional<int>> charges;  // per tuple, 0-based gate index
    std::string transcript;                   // optional construction log
};

// Returns human-readable diagnostics; empty means the certificate is valid
// for the given circuit and establishes gate_count >= claimed_bound.
inline std::vector<std::string> check_certificate(const ChainCertificate& cert,
                                                  const Circuit& c) {
    std::vector<std::string> out;
    if (cert.tuples.size() != cert.charges.size()) {
        out.push_back("chain: tuple/charge bookkeeping sizes differ");
        return out;
    }
    if (c.inputs() != cert.n)
        out.push_back("dimension: certificate is for " + std::to_string(cert.n) +
                      " inputs, circuit has " + std::to_string(c.inputs()));
    bool widths_ok = true;
    for (const BitTuple& t : cert.tuples)
        if (t.width() != cert.n) widths_ok = false;
    if (!widths_ok)
        out.push_back("chain: tuple width differs from input count");

    // (a) one tuple per weight 0..n, ascending under the coordinatewise order
    if (static_cast<int>(cert.tuples.size()) != cert.n + 1)
        out.push_back("chain: expected " + std::to_string(cert.n + 1) +
                      " tuples, found " + std::to_string(cert.tuples.size()));
    bool chain_ok = widths_ok &&
                    static_cast<int>(cert.tuples.size()) == cert.n + 1;
    if (chain_ok)
        for (std::size_t i = 0; i < cert.tuples.size(); ++i) {
            if (cert.tuples[i].weight() != static_cast<int>(i)) {
                out.push_back("chain: tuple " + std::to_string(i + 1) +
                              " does not have weight " + std::to_string(i));
                chain_ok = false;
            }
            if (i > 0 && !leq(cert.tuples[i - 1], cert.tuples[i])) {
                out.push_back("chain: tuple " + std::to_string(i + 1) +
                              " does not extend tuple " + std::to_string(i));
                chain_ok = false;
            }
        }

    const bool circuit_usable = c.inputs() == cert.n && c.is_valid() &&
                                c.gate_count() > 0 && widths_ok;
    if (!c.is_valid())
        out.push_back("circuit: circuit fails validation");

    // target function: the bound is about circuits computing this function
    if (circuit_usable && cert.n <= TruthTable::max_inputs &&
        c.truth_table() != target_table(cert.function, cert.n))
        out.push_back(std::string("function: circuit does not compute ") +
                      target_name(cert.function));

    // (b) every charged gate fires on its tuple
    std::vector<int> seen(static_cast<std::size_t>(std::max(c.gate_count(), 1)), 0);
    int charge_count = 0;
    for (std::size_t i = 0; i < cert.charges.size(); ++i) {
        if (!cert.charges[i]) continue;
        ++charge_count;
        const int g = *cert.charges[i];
        if (g < 0 || g >= c.gate_count()) {
            out.push_back("charge: tuple " + std::to_string(i + 1) +
                          " charges gate g" + std::to_string(g + 1) +
                          " which the circuit does not have");
            continue;
        }
        // (c) no gate pays for two tuples
        if (++seen[static_cast<std::size_t>(g)] == 2)
            out.push_back("injectivity: gate g" + std::to_string(g + 1) +
                          " charged more than once");
        if (circuit_usable && cert.tuples[i].width() == cert.n &&
            c.evaluate(cert.tuples[i]).values[static_cast<std::size_t>(g)] != 1)
            out.push_back("charge: gate g" + std::to_string(g + 1) +
                          " is 0 on tuple " + cert.tuples[i].to_string());
    }

    // (d) the claimed bound is exactly the number of charges
    if (cert.claimed_bound != charge_count)
        out.push_back("bound: claimed " + std::to_string(cert.claimed_bound) +
                      " but certificate carries " + std::to_string(charge_count) +
                      " charges");

    // (e) coverage of the critical layers: parity charges every odd weight;
    // majority charges every weight on one side of the threshold
    if (chain_ok) {
        auto charged = [&](int w) { return cert.charges[static_cast<std::size_t>(w)].has_value(); };
        if (cert.function == TargetFunction::parity) {
            for (int w = 1; w <= cert.n; w += 2)
                if (!charged(w))
                    out.push_back("coverage: odd weight " + std::to_string(w) +
                                  " is not charged");
        } else {
            const int thr = (cert.n + 1) / 2;
            bool high = true, low = true;
            for (int w = thr; w <= cert.n; ++w) high = high && charged(w);
            for (int w = 0; w < thr; ++w) low = low && charged(w);
            if (!high && !low)
                out.push_back(
                    "coverage: neither all weights >= " + std::to_string(thr) +
                    " nor all weights < " + std::to_string(thr) + " are charged");
        }
    }
    return out;
}

// --- text format ------------------------------------------------------------
//
//   ac-cert v1
//   inputs <n>
//   function parity|majority
//   bound <b>
//   tuple <bitstring> [charge <gate-index>]      (ascending weight)
//   transcript                                    (optional; rest is verbatim)

inline ChainCertificate parse_certificate(std::istream& in) {
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
    auto fail = [&](const std::string& msg) -> parse_error {
        return parse_error("line " + std::to_string(line_no) + ": " + msg);
    };

    ChainCertificate cert;
    std::vector<std::string> toks;
    if (!next_line(toks) || toks.size() != 2 || toks[0] != "ac-cert" || toks[1] != "v1")
        throw fail("expected 'ac-cert v1' header");
    if (!next_line(toks) || toks.size() != 2 || toks[0] != "inputs")
        throw fail("expected 'inputs <n>'");
    cert.n = detail::parse_positive(toks[1], line_no, "input count");
    if (cert.n > BitTuple::max_width) throw fail("too many inputs");
    if (!next_line(toks) || toks.size() != 2 || toks[0] != "function")
        throw fail("expected 'function parity|majority'");
    if (toks[1] == "parity")
        cert.function = TargetFunction::parity;
    else if (toks[1] == "majority")
        cert.function = TargetFunction::majority;
    else
        throw fail("unknown function '" + toks[1] + "'");
    if (!next_line(toks) || toks.size() != 2 || toks[0] != "bound")
        throw fail("expected 'bound <b>'");
    if (toks[1].find_first_not_of("0123456789") != std::string::npos || toks[1].empty())
        throw fail("bad bound '" + toks[1] + "'");
    cert.claimed_bound = static_cast<int>(std::stol(toks[1]));

    while (next_line(toks)) {
        if (toks[0] == "transcript") {
            if (toks.size() != 1) throw fail("bad transcript marker");
            std::ostringstream rest;
            while (std::getline(in, line)) rest << detail::chomp(line) << '\n';
            cert.transcript = rest.str();
            break;
        }
        if (toks[0] != "tuple" || (toks.size() != 2 && toks.size() != 4))
            throw fail("expected 'tuple <bits> [charge <k>]'");
        BitTuple t = [&] {
            try {
                return BitTuple::from_string(toks[1]);
            } catch (const error& e) {
                throw fail(e.what());
            }
        }();
        std::optional<int> charge;
        if (toks.size() == 4) {
            if (toks[2] != "charge") throw fail("expected 'charge <k>'");
            charge = detail::parse_positive(toks[3], line_no, "gate index") - 1;
        }
        cert.tuples.push_back(t);
        cert.charges.push_back(charge);
    }
    return cert;
}

inline ChainCertificate parse_certificate(const std::string& text) {
    std::istringstream in(text);
    return parse_certificate(in);
}

inline std::string serialize_certificate(const ChainCertificate& cert) {
    std::ostringstream out;
    out << "ac-cert v1\n";
    out << "inputs " << cert.n << "\n";
    out << "function " << target_name(cert.function) << "\n";
    out << "bound " << cert.claimed_bound << "\n";
    for (std::size_t i = 0; i < cert.tuples.size(); ++i) {
        out << "tuple " << cert.tuples[i].to_string();
        if (i < cert.charges.size() && cert.charges[i])
            out << " charge " << (*cert.charges[i] + 1);
        out << "\n";
    }
    if (!cert.transcript.empty()) {
        out << "transcript\n" << cert.transcript;
        if (cert.transcript.back() != '\n') out << "\n";
    }
    return out.str();
}

}  // namespace ac
