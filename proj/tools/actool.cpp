#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"

#include "ac/adversary.hpp"
#include "ac/antichain.hpp"
#include "ac/certificate.hpp"
#include "ac/circuit.hpp"
#include "ac/circuit_io.hpp"
#include "ac/cube.hpp"
#include "ac/errors.hpp"
#include "ac/oracle.hpp"
#include "ac/synth.hpp"
#include "ac/truth_table.hpp"

namespace {

// Option-level mistakes that CLI11 cannot see (missing files, bad ranges,
// conflicting flags); they exit with the same code as argument errors.
struct usage_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw usage_error("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw usage_error("cannot write file: " + path);
    out << text;
}

int cmd_synth(const std::string& func, int n, const std::vector<int>& layers,
              const std::string& out_path) {
    if (func == "symmetric" && layers.empty())
        throw usage_error("--func symmetric requires --layers");
    if (func != "symmetric" && !layers.empty())
        throw usage_error("--layers applies only to --func symmetric");
    ac::Circuit c = func == "parity" ? ac::build_parity_circuit(n)
                    : func == "majority" ? ac::build_majority_circuit(n)
                    : func == "layered-parity"
                        ? ac::build_layered_parity_circuit(n)
                        : ac::build_symmetric_circuit(n, layers);
    std::cout << "gates: " << c.gate_count() << "\n";
    if (!out_path.empty()) write_file(out_path, ac::serialize_circuit(c));
    return 0;
}

int cmd_eval(const std::string& circuit_path, const std::string& input) {
    const ac::Circuit c = ac::parse_circuit(read_file(circuit_path));
    const ac::BitTuple x = ac::BitTuple::from_string(input);
    const ac::EvalResult r = c.evaluate(x);
    for (std::size_t k = 0; k < r.values.size(); ++k)
        std::cout << "h" << (k + 1) << " = " << int(r.values[k]) << "\n";
    std::cout << "out = " << r.output << "\n";
    return 0;
}

int cmd_validate(const std::string& circuit_path) {
    const ac::Circuit c = ac::parse_circuit(read_file(circuit_path));
    const std::vector<std::string> problems = c.validate();
    if (problems.empty()) {
        std::cout << "OK\n";
        return 0;
    }
    for (const std::string& p : problems) std::cout << p << "\n";
    return 1;
}

int cmd_certify(const std::string& circuit_path, const std::string& func,
                const std::string& out_path) {
    const ac::Circuit c = ac::parse_circuit(read_file(circuit_path));
    const ac::ChainCertificate cert = func == "parity"
                                          ? ac::run_parity_adversary(c)
                                          : ac::run_majority_adversary(c);
    std::cout << "bound: " << cert.claimed_bound << "\n";
    std::cout << "gates: " << c.gate_count() << "\n";
    if (cert.claimed_bound == c.gate_count()) std::cout << "tight\n";
    if (!out_path.empty()) write_file(out_path, ac::serialize_certificate(cert));
    return 0;
}

int cmd_check_cert(const std::string& circuit_path, const std::string& cert_path) {
    const ac::Circuit c = ac::parse_circuit(read_file(circuit_path));
    const ac::ChainCertificate cert = ac::parse_certificate(read_file(cert_path));
    const std::vector<std::string> problems = ac::check_certificate(cert, c);
    if (problems.empty()) {
        std::cout << "certificate OK: L >= " << cert.claimed_bound << "\n";
        return 0;
    }
    for (const std::string& p : problems) std::cout << p << "\n";
    return 1;
}

int cmd_search(const std::string& func, const std::string& table, int n,
               int max_gates, int jobs, std::uint64_t seed,
               const std::string& out_path) {
    if (table.empty() && func.empty())
        throw usage_error("search needs --func or --table");
    if (!table.empty() && !func.empty())
        throw usage_error("--func and --table are mutually exclusive");
    if (table.empty() && n == 0)
        throw usage_error("--func needs --n");
    ac::TruthTable target = !table.empty() ? ac::TruthTable::from_string(table)
                            : func == "parity" ? ac::TruthTable::parity(n)
                                               : ac::TruthTable::majority(n);
    ac::SearchBudget budget;
    budget.inputs = target.inputs();
    budget.max_gates = max_gates;
    budget.jobs = jobs;
    budget.seed = seed;
    const ac::SearchReport rep = ac::min_complexity(target, budget);

    std::cout << "candidates: " << rep.space_single << " single";
    if (rep.space_pairs != 0) std::cout << ", " << rep.space_pairs << " pairs";
    std::cout << "\n";
    std::cout << "visited: " << rep.visited_single << " single";
    if (rep.space_pairs != 0) std::cout << ", " << rep.visited_pairs << " pairs";
    std::cout << "\n";
    if (rep.min_gates >= 0) {
        std::cout << "min gates: " << rep.min_gates << "\n";
        if (!out_path.empty() && rep.circuit)
            write_file(out_path, ac::serialize_circuit(*rep.circuit));
    } else {
        const std::string name = func == "parity" ? "p_" + std::to_string(target.inputs())
                                 : func == "majority"
                                     ? "m_" + std::to_string(target.inputs())
                                     : "f";
        std::cout << "no circuit with <= " << max_gates << " gates; L(" << name
                  << ") >= " << (max_gates + 1) << "\n";
    }
    return 0;
}

int cmd_bounds(const std::string& range) {
    const std::size_t dots = range.find("..");
    if (dots == std::string::npos) throw usage_error("--n-range expects A..B");
    int a = 0, b = 0;
    try {
        a = std::stoi(range.substr(0, dots));
        b = std::stoi(range.substr(dots + 2));
    } catch (const std::exception&) {
        throw usage_error("--n-range expects A..B with integers");
    }
    if (a < 1 || b < a || b > 64) throw usage_error("--n-range must satisfy 1 <= A <= B <= 64");
    for (int n = a; n <= b; ++n) {
        const int lower = n / 2 + 1;
        const int upper = n;
        if (lower > upper)
            throw ac::invariant_violation("bounds row has lower > upper");
        std::cout << "n=" << n << " parity=" << (n + 1) / 2
                  << " majority=" << (n / 2 + 1) << " lower=" << lower
                  << " upper=" << upper << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"circuits over the antichain basis: synthesis, certification, search"};
    app.require_subcommand(1);

    auto* synth = app.add_subcommand("synth", "synthesize a circuit for a named function");
    std::string synth_func;
    int synth_n = 0;
    std::vector<int> synth_layers;
    std::string synth_out;
    synth->add_option("--func", synth_func, "parity|majority|layered-parity|symmetric")
        ->required()
        ->check(CLI::IsMember({"parity", "majority", "layered-parity", "symmetric"}));
    synth->add_option("--n", synth_n, "number of inputs")->required()->check(CLI::Range(1, 20));
    synth->add_option("--layers", synth_layers, "comma-separated weights for --func symmetric")
        ->delimiter(',');
    synth->add_option("-o,--output", synth_out, "write the circuit file here");

    auto* eval = app.add_subcommand("eval", "evaluate a circuit on one input");
    std::string eval_circuit, eval_input;
    eval->add_option("--circuit", eval_circuit, "circuit file")->required();
    eval->add_option("--input", eval_input, "input bitstring")->required();

    auto* validate = app.add_subcommand("validate", "check circuit well-formedness");
    std::string validate_circuit;
    validate->add_option("--circuit", validate_circuit, "circuit file")->required();

    auto* certify = app.add_subcommand("certify", "replay the lower-bound adversary");
    std::string certify_circuit, certify_func, certify_out;
    certify->add_option("--circuit", certify_circuit, "circuit file")->required();
    certify->add_option("--func", certify_func, "parity|majority")
        ->required()
        ->check(CLI::IsMember({"parity", "majority"}));
    certify->add_option("-o,--output", certify_out, "write the certificate file here");

    auto* check = app.add_subcommand("check-cert", "verify a certificate against a circuit");
    std::string check_circuit, check_cert;
    check->add_option("--circuit", check_circuit, "circuit file")->required();
    check->add_option("--cert", check_cert, "certificate file")->required();

    auto* search = app.add_subcommand("search", "exhaustive minimum-gate search (n <= 4)");
    std::string search_func, search_table, search_out;
    int search_n = 0, search_max = 2;
    int search_jobs = std::max(1u, std::thread::hardware_concurrency());
    std::uint64_t search_seed = ac::SearchBudget{}.seed;
    search->add_option("--func", search_func, "parity|majority")
        ->check(CLI::IsMember({"parity", "majority"}));
    search->add_option("--table", search_table, "truth table bitstring (lexicographic)");
    search->add_option("--n", search_n, "number of inputs (with --func)")->check(CLI::Range(1, 4));
    search->add_option("--max-gates", search_max, "gate budget")->check(CLI::Range(1, 2));
    search->add_option("--jobs", search_jobs, "worker count")->check(CLI::Range(1, 256));
    search->add_option("--seed", search_seed, "probe-order seed (results are seed-independent)");
    search->add_option("-o,--output", search_out, "write the found circuit here");

    auto* bounds = app.add_subcommand("bounds", "print complexity bounds per input count");
    std::string bounds_range;
    bounds->add_option("--n-range", bounds_range, "rows to print, e.g. 1..12")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (app.got_subcommand(synth))
            return cmd_synth(synth_func, synth_n, synth_layers, synth_out);
        if (app.got_subcommand(eval)) return cmd_eval(eval_circuit, eval_input);
        if (app.got_subcommand(validate)) return cmd_validate(validate_circuit);
        if (app.got_subcommand(certify))
            return cmd_certify(certify_circuit, certify_func, certify_out);
        if (app.got_subcommand(check)) return cmd_check_cert(check_circuit, check_cert);
        if (app.got_subcommand(search))
            return cmd_search(search_func, search_table, search_n, search_max,
                              search_jobs, search_seed, search_out);
        if (app.got_subcommand(bounds)) return cmd_bounds(bounds_range);
        throw usage_error("no subcommand");
    } catch (const ac::parse_error& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 3;
    } catch (const ac::precondition_error& e) {
        std::cerr << "precondition failed: " << e.what() << "\n";
        return 4;
    } catch (const ac::invariant_violation& e) {
        std::cerr << "invariant violation: " << e.what() << "\n";
        if (!e.context().empty())
            std::cerr << "--- transcript ---\n" << e.context();
        return 5;
    } catch (const ac::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const usage_error& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
