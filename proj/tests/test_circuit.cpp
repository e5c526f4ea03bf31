#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "ac/circuit.hpp"
#include "ac/circuit_io.hpp"
#include "ac/errors.hpp"
#include "ac/synth.hpp"
#include "ac/truth_table.hpp"

using namespace ac;

namespace {
bool mentions(const std::vector<std::string>& findings, const std::string& text) {
    return std::any_of(findings.begin(), findings.end(), [&](const std::string& f) {
        return f.find(text) != std::string::npos;
    });
}

// Reference evaluator written from scratch: builds each gate key by direct
// wire lookup and tests support membership by linear scan.
int reference_output(const Circuit& c, std::uint32_t x) {
    std::vector<int> val(static_cast<std::size_t>(c.gate_count()));
    for (int g = 0; g < c.gate_count(); ++g) {
        const Gate& gate = c.gate(g);
        std::uint32_t key = 0;
        for (const Wire& w : gate.wires) {
            int bit = w.kind == Wire::Kind::input
                          ? static_cast<int>((x >> (c.inputs() - 1 - w.index)) & 1u)
                          : val[static_cast<std::size_t>(w.index)];
            key = key * 2 + static_cast<std::uint32_t>(bit);
        }
        bool fires = false;
        for (std::uint32_t s : gate.table.support)
            if (s == key) fires = true;
        val[static_cast<std::size_t>(g)] = fires ? 1 : 0;
    }
    return val.back();
}

Gate make_gate(std::vector<Wire> wires, int arity,
               std::vector<std::uint32_t> support) {
    std::sort(support.begin(), support.end());
    return Gate{std::move(wires), GateTable{arity, std::move(support)}};
}
}  // namespace

TEST_CASE("validator reports each structural defect") {
    REQUIRE(mentions(Circuit(2, {}).validate(), "circuit has no gates"));

    Circuit bad_input(2, {make_gate({input_wire(3)}, 1, {})});
    REQUIRE(mentions(bad_input.validate(), "gate 1: input index x4 out of range"));

    Circuit bad_gate_ref(2, {make_gate({gate_wire(5)}, 1, {})});
    REQUIRE(mentions(bad_gate_ref.validate(), "gate 1: gate index g6 out of range"));

    Circuit self_ref(2, {make_gate({gate_wire(0)}, 1, {})});
    REQUIRE(mentions(self_ref.validate(), "gate 1: forward or self reference g1"));

    Circuit dup_wire(2, {make_gate({input_wire(0), input_wire(0)}, 2, {1})});
    REQUIRE(mentions(dup_wire.validate(), "gate 1: duplicate wire"));

    Circuit arity_mismatch(2, {make_gate({input_wire(0), input_wire(1)}, 3, {})});
    REQUIRE(mentions(arity_mismatch.validate(),
                     "gate 1: arity 3 does not match wire count 2"));

    Circuit wide_support(2, {make_gate({input_wire(0), input_wire(1)}, 2, {4})});
    REQUIRE(mentions(wide_support.validate(), "gate 1: support tuple wider than arity"));

    Circuit dup_support(2, {make_gate({input_wire(0), input_wire(1)}, 2, {1, 1})});
    REQUIRE(mentions(dup_support.validate(), "gate 1: duplicate support tuple"));

    Circuit chain_support(2, {make_gate({input_wire(0), input_wire(1)}, 2, {1, 3})});
    REQUIRE(mentions(chain_support.validate(), "gate 1: support is not an antichain"));

    // defects on a later gate carry that gate's number
    Circuit second(2, {make_gate({input_wire(0)}, 1, {}),
                       make_gate({input_wire(0), gate_wire(1)}, 2, {})});
    REQUIRE(mentions(second.validate(), "gate 2: forward or self reference g2"));

    REQUIRE(build_majority_circuit(4).is_valid());
    REQUIRE_THROWS_AS(Circuit(0, {}), capacity_error);
    REQUIRE_THROWS_AS(Circuit(33, {}), capacity_error);
}

TEST_CASE("evaluation matches the reference on synthesized circuits") {
    for (int n = 1; n <= 6; ++n) {
        Circuit maj = build_majority_circuit(n);
        Circuit par = build_parity_circuit(n);
        for (std::uint32_t x = 0; x < (std::uint32_t{1} << n); ++x) {
            BitTuple a(n, x);
            REQUIRE(maj.evaluate(a).output == reference_output(maj, x));
            REQUIRE(par.evaluate(a).output == reference_output(par, x));
        }
        REQUIRE(maj.truth_table() == TruthTable::majority(n));
        REQUIRE(par.truth_table() == TruthTable::parity(n));
    }
    // spot check: four inputs, first two high -> majority holds
    Circuit m4 = build_majority_circuit(4);
    EvalResult r = m4.evaluate(BitTuple::from_string("1100"));
    REQUIRE(r.output == 1);
    REQUIRE(r.values.size() == static_cast<std::size_t>(m4.gate_count()));
    REQUIRE(m4.evaluate(BitTuple::from_string("1000")).output == 0);
    REQUIRE(m4.evaluate(BitTuple::from_string("0111")).output == 1);
}

TEST_CASE("evaluation error paths") {
    Circuit m3 = build_majority_circuit(3);
    REQUIRE_THROWS_AS(m3.evaluate(BitTuple::from_string("0110")), dimension_error);
    REQUIRE_THROWS_AS(Circuit(3, {}).evaluate(BitTuple::zeros(3)), precondition_error);
    REQUIRE_THROWS_AS(Circuit(3, {}).truth_table(), precondition_error);
    Circuit broken(2, {make_gate({input_wire(0)}, 2, {})});
    REQUIRE_THROWS_AS(broken.evaluate(BitTuple::zeros(2)), precondition_error);
}

TEST_CASE("truth tables agree with the reference across all points") {
    std::vector<Circuit> circuits;
    for (int n = 2; n <= 5; ++n) {
        circuits.push_back(build_parity_circuit(n));
        circuits.push_back(build_majority_circuit(n));
        circuits.push_back(build_layered_parity_circuit(n));
        circuits.push_back(build_symmetric_circuit(n, {0, n}));
    }
    for (const Circuit& c : circuits) {
        TruthTable t = c.truth_table();
        for (std::uint32_t x = 0; x < t.size(); ++x)
            REQUIRE(t.get(x) == (reference_output(c, x) != 0));
    }
}

TEST_CASE("duplicate wires reduce to the diagonal restriction") {
    // gate reads (x1, x1, x2) with an exact-weight-2 table; only the tuple
    // where both x1 coordinates agree survives the restriction
    Circuit doubled(2, {make_gate({input_wire(0), input_wire(0), input_wire(1)}, 3,
                                  {0b011, 0b101, 0b110})});
    REQUIRE(mentions(doubled.validate(), "duplicate wire"));
    Circuit slim = doubled.reduced();
    REQUIRE(slim.is_valid());
    REQUIRE(slim.gate(0).wires.size() == 2);
    REQUIRE(slim.gate(0).table.arity == 2);
    REQUIRE(slim.gate(0).table.support == std::vector<std::uint32_t>{0b10});
    REQUIRE(slim.truth_table() == doubled.truth_table());

    // duplicated gate wire as well
    Circuit g_doubled(2, {make_gate({input_wire(0), input_wire(1)}, 2, {0b01, 0b10}),
                          make_gate({gate_wire(0), gate_wire(0)}, 2, {0b11})});
    Circuit g_slim = g_doubled.reduced();
    REQUIRE(g_slim.is_valid());
    REQUIRE(g_slim.truth_table() == g_doubled.truth_table());

    // an already-clean circuit is untouched
    Circuit m4 = build_majority_circuit(4);
    REQUIRE(m4.reduced() == m4);
}

TEST_CASE("serialize then parse is the identity") {
    for (int n = 1; n <= 6; ++n) {
        Circuit c = build_majority_circuit(n);
        REQUIRE(parse_circuit(serialize_circuit(c)) == c);
        Circuit p = build_parity_circuit(n);
        REQUIRE(parse_circuit(serialize_circuit(p)) == p);
    }
    Circuit lp5 = build_layered_parity_circuit(5);
    REQUIRE(parse_circuit(serialize_circuit(lp5)) == lp5);
}

TEST_CASE("parser tolerates formatting noise") {
    // unsorted support, blank lines, CRLF endings, stray spaces
    std::string text =
        "ac-circuit v1\r\n"
        "\r\n"
        "inputs 2\r\n"
        "gate 1 wires x1  x2\r\n"
        "support 10\r\n"
        "support 01\r\n"
        "\r\n"
        "endgate\r\n";
    Circuit c = parse_circuit(text);
    REQUIRE(c.inputs() == 2);
    REQUIRE(c.gate_count() == 1);
    REQUIRE(c.gate(0).table.support == std::vector<std::uint32_t>{1, 2});
    REQUIRE(c.is_valid());

    // gate with no support lines: arity comes from the wires, table is empty
    Circuit zero = parse_circuit("ac-circuit v1\ninputs 2\ngate 1 wires x1 x2\nendgate\n");
    REQUIRE(zero.gate(0).table.arity == 2);
    REQUIRE(zero.gate(0).table.support.empty());
    REQUIRE(zero.is_valid());
}

TEST_CASE("parser rejects malformed circuits") {
    auto reject = [](const std::string& text, const std::string& needle) {
        try {
            parse_circuit(text);
            FAIL("expected parse_error for: " << needle);
        } catch (const parse_error& e) {
            INFO("expected substring: " << needle << "\nactual message: " << e.what());
            REQUIRE(std::string(e.what()).find(needle) != std::string::npos);
        }
    };
    reject("ac-circuit v2\ninputs 2\n", "expected 'ac-circuit v1' header");
    reject("", "expected 'ac-circuit v1' header");
    reject("ac-circuit v1\ninput 2\n", "expected 'inputs <n>'");
    reject("ac-circuit v1\ninputs 0\n", "input count out of range");
    reject("ac-circuit v1\ninputs two\n", "bad input count");
    reject("ac-circuit v1\ninputs 33\n", "too many inputs");
    reject("ac-circuit v1\ninputs 2\ngate 2 wires x1\nendgate\n",
           "gate index out of order");
    reject("ac-circuit v1\ninputs 2\ngate 1 wires y1\nendgate\n", "bad wire 'y1'");
    reject("ac-circuit v1\ninputs 2\ngate 1 wires x0\nendgate\n",
           "wire index out of range");
    reject("ac-circuit v1\ninputs 2\ngate 1 wires x1 x2\nsupport 01\n",
           "missing endgate");
    reject("ac-circuit v1\ninputs 2\ngate 1 wires x1 x2\nsupport 01\nsupport 101\nendgate\n",
           "support width differs from previous lines");
    reject("ac-circuit v1\ninputs 2\ngate 1 wires x1\nsupport 02\nendgate\n",
           "line 4");
    reject("ac-circuit v1\ninputs 2\nwires x1\nendgate\n", "expected 'gate <k> wires ...'");
    reject("ac-circuit v1\ninputs 2\ngate 1 wires x1\nendgate now\n", "bad endgate");
}

TEST_CASE("wireless constant gate survives a round trip") {
    // a zero-arity gate whose support holds the empty tuple computes constant 1
    Circuit one(1, {Gate{{}, GateTable{0, {0}}}});
    REQUIRE(one.is_valid());
    REQUIRE(one.evaluate(BitTuple::zeros(1)).output == 1);
    REQUIRE(one.evaluate(BitTuple::ones(1)).output == 1);
    std::string text = serialize_circuit(one);
    REQUIRE(text.find("gate 1 wires\n") != std::string::npos);
    REQUIRE(text.find("support\n") != std::string::npos);
    REQUIRE(parse_circuit(text) == one);

    // zero-arity empty support computes constant 0
    Circuit zero(1, {Gate{{}, GateTable{0, {}}}});
    REQUIRE(zero.is_valid());
    REQUIRE(zero.evaluate(BitTuple::ones(1)).output == 0);
    REQUIRE(parse_circuit(serialize_circuit(zero)) == zero);
}

TEST_CASE("parsed but broken circuits reach the validator") {
    // the parser is syntax-only: a comparable support pair parses fine and the
    // validator reports it
    Circuit c = parse_circuit(
        "ac-circuit v1\ninputs 2\ngate 1 wires x1 x2\nsupport 01\nsupport 11\nendgate\n");
    REQUIRE(mentions(c.validate(), "support is not an antichain"));
    Circuit fwd = parse_circuit(
        "ac-circuit v1\ninputs 2\ngate 1 wires g2\nendgate\ngate 2 wires x1\nendgate\n");
    REQUIRE(mentions(fwd.validate(), "gate 1: forward or self reference g2"));
}
