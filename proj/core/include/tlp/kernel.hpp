#pragma once

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "tlp/graph.hpp"
#include "tlp/instance.hpp"
#include "tlp/recognition.hpp"
#include "tlp/rules.hpp"

namespace tlp {

/// Raised when the driver catches itself breaking one of its own invariants.
class InvariantViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

enum class Replacement { None, K1, K22 };

struct TraceRecord {
    Step step = Step::Terminal;
    int k_before = 0;
    int k_after = 0;
    std::size_t n_before = 0;
    std::size_t n_after = 0;
    VertexSet deleted_vertices;
    std::vector<Edge> deleted_edges;
    std::vector<Edge> added_edges;
    /// GoodModulator records: the modulator; Terminal records: the final one (if any).
    VertexSet modulator;
    /// R1 records: the obstructions justifying the deletion (empty when a
    /// cover search certified it).
    std::vector<Obstruction> witnesses;
    /// Terminal records that swap the instance for a constant one.
    Replacement replacement = Replacement::None;
    std::string note;

    friend bool operator==(const TraceRecord&, const TraceRecord&) = default;
};

using RuleTrace = std::vector<TraceRecord>;

struct CompressResult {
    Instance instance;
    RuleTrace trace;
    /// Good modulator of the output when it is not a constant instance.
    VertexSet modulator;
};

/// Runs reduction to a fixed point. The output is equivalent to `inst`, has
/// no more vertices and no larger budget, and is either (K1, 0), (K2,2, 0) or
/// an instance none of R2..R8 applies to. Throws std::invalid_argument for
/// k < 0 and InvariantViolation if the step count exceeds |V| + |E| + k + 2.
CompressResult compress(const Instance& inst);

Instance constant_instance(Replacement r);

/// Applies the recorded edits to `input`; the result equals compress(input).instance.
/// Throws InvariantViolation if a record does not match the running instance.
Instance replay(const Instance& input, const RuleTrace& trace);

void write_trace_jsonl(std::ostream& out, const RuleTrace& trace);
/// Inverse of write_trace_jsonl; lines with an unknown "type" are skipped.
RuleTrace read_trace_jsonl(std::istream& in);

/// Explicit vertex bound for the output of compress on budget k, assembled
/// from the four component-count bounds with |S| = 84k^2 + 7k.
boost::multiprecision::cpp_int kernel_size_bound(int k);

struct OutsideCensus {
    std::size_t nontrivial_components = 0;
    std::size_t isolated_vertices = 0;
    std::size_t largest_complete = 0;
    std::size_t largest_incomplete = 0;
};

OutsideCensus census_outside(const Graph& g, const VertexSet& s);

/// Describes every component-count bound that (g, k, s) exceeds; empty when all hold.
std::vector<std::string> bound_violations(const Graph& g, int k, const VertexSet& s);

}  // namespace tlp
