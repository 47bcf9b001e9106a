#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "tlp/instance_io.hpp"
#include "tlp/kernel.hpp"
#include "tlp/oracle.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitInvariant = 2;

const char* verdict_name(tlp::Verdict v) {
    switch (v) {
        case tlp::Verdict::Yes: return "YES";
        case tlp::Verdict::No: return "NO";
        case tlp::Verdict::Indeterminate: break;
    }
    return "UNKNOWN";
}

// Prints the oracle answers and reports whether they agree.
bool verify(const tlp::Instance& in, const tlp::Instance& out, std::size_t cap) {
    if (in.graph.order() > cap) {
        std::cerr << "verify: skipped, input has " << in.graph.order() << " vertices (cap " << cap << ")\n";
        return true;
    }
    const auto before = tlp::exact_solve(in).verdict;
    const auto after = tlp::exact_solve(out).verdict;
    std::cerr << "verify: input " << verdict_name(before) << ", kernel " << verdict_name(after) << '\n';
    if (before == tlp::Verdict::Indeterminate || after == tlp::Verdict::Indeterminate) return true;
    return before == after;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Kernelize a 3-Leaf Power Deletion instance"};
    std::string input_path, trace_path;
    int k = 0;
    bool do_verify = false;
    std::uint64_t seed = 0;
    std::size_t verify_cap = 18;
    app.add_option("input", input_path, "Instance file (p/e format)")->required();
    app.add_option("-k", k, "Deletion budget")->required()->check(CLI::NonNegativeNumber);
    app.add_option("--trace", trace_path, "Write the rule trace as JSON lines");
    app.add_flag("--verify", do_verify, "Check the kernel against the exact solver on small inputs");
    app.add_option("--verify-cap", verify_cap, "Largest vertex count --verify will solve");
    app.add_option("--seed", seed, "Recorded in the trace; the reduction itself is deterministic");
    CLI11_PARSE(app, argc, argv);

    tlp::Instance inst;
    try {
        std::ifstream in(input_path);
        if (!in) {
            std::cerr << "kernelize: cannot open " << input_path << '\n';
            return kExitInput;
        }
        std::stringstream buf;
        buf << in.rdbuf();
        inst = tlp::parse_instance(buf.str());
        inst.k = k;
    } catch (const std::exception& e) {
        std::cerr << "kernelize: " << input_path << ": " << e.what() << '\n';
        return kExitInput;
    }

    tlp::CompressResult res;
    try {
        res = tlp::compress(inst);
        if (!(tlp::replay(inst, res.trace) == res.instance)) throw tlp::InvariantViolation("trace replay disagrees with the kernel");
        if (res.instance.graph.order() > tlp::kernel_size_bound(inst.k))
            throw tlp::InvariantViolation("kernel exceeds its size bound");
    } catch (const std::logic_error& e) {
        std::cerr << "kernelize: internal error: " << e.what() << '\n';
        return kExitInvariant;
    }

    if (!trace_path.empty()) {
        std::ofstream out(trace_path);
        if (!out) {
            std::cerr << "kernelize: cannot write " << trace_path << '\n';
            return kExitInput;
        }
        const nlohmann::json header = {{"type", "header"},  {"seed", seed}, {"k", inst.k},
                                       {"n", inst.graph.order()}, {"m", inst.graph.size()}};
        out << header.dump() << '\n';
        tlp::write_trace_jsonl(out, res.trace);
    }

    std::cout << tlp::serialize_instance(res.instance);

    if (do_verify && !verify(inst, res.instance, verify_cap)) {
        std::cerr << "kernelize: kernel is not equivalent to the input\n";
        return kExitInvariant;
    }
    return kExitOk;
}
