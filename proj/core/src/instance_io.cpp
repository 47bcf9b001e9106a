#include "tlp/instance_io.hpp"

#include <charconv>
#include <optional>
#include <set>
#include <sstream>
#include <vector>

namespace tlp {

ParseError::ParseError(std::size_t line, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}

namespace {

std::vector<std::string_view> split_tokens(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
        if (j > i) out.push_back(line.substr(i, j - i));
        i = j;
    }
    return out;
}

long long to_int(std::string_view tok, std::size_t line) {
    long long value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || ptr != tok.data() + tok.size())
        throw ParseError(line, "expected integer, got '" + std::string(tok) + "'");
    return value;
}

}  // namespace

Instance parse_instance(std::string_view text) {
    std::optional<long long> k;
    long long n = -1;
    long long m = -1;
    std::vector<Edge> edges;
    std::set<Edge> seen;

    std::size_t line_no = 0;
    std::size_t last_content = 0;  // end-of-input errors point here
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(pos, end - pos);
        pos = end + 1;
        ++line_no;

        auto toks = split_tokens(line);
        if (toks.empty() || toks[0].front() == '#') {
            if (end == text.size()) break;
            continue;
        }
        last_content = line_no;
        const auto tag = toks[0];
        if (tag == "k") {
            if (toks.size() != 2) throw ParseError(line_no, "expected 'k <int>'");
            if (k) throw ParseError(line_no, "duplicate 'k' line");
            if (n >= 0) throw ParseError(line_no, "'k' line must precede the header");
            k = to_int(toks[1], line_no);
            if (*k < 0) throw ParseError(line_no, "k must be non-negative");
        } else if (tag == "p") {
            if (toks.size() != 3) throw ParseError(line_no, "expected 'p <n> <m>'");
            if (n >= 0) throw ParseError(line_no, "duplicate header");
            n = to_int(toks[1], line_no);
            m = to_int(toks[2], line_no);
            if (n < 0 || m < 0) throw ParseError(line_no, "negative size in header");
        } else if (tag == "e") {
            if (n < 0) throw ParseError(line_no, "edge before header");
            if (toks.size() != 3) throw ParseError(line_no, "expected 'e <u> <v>'");
            const auto u = to_int(toks[1], line_no);
            const auto v = to_int(toks[2], line_no);
            if (u < 0 || u >= n || v < 0 || v >= n) throw ParseError(line_no, "vertex id out of range");
            if (u == v) throw ParseError(line_no, "self-loop at vertex " + std::to_string(u));
            Edge e(static_cast<Vertex>(u), static_cast<Vertex>(v));
            if (!seen.insert(e).second) throw ParseError(line_no, "duplicate edge " + std::to_string(e.u) + " " + std::to_string(e.v));
            edges.push_back(e);
        } else {
            throw ParseError(line_no, "unknown line tag '" + std::string(tag) + "'");
        }
        if (end == text.size()) break;
    }
    if (n < 0) throw ParseError(last_content, "missing 'p <n> <m>' header");
    if (static_cast<long long>(edges.size()) != m)
        throw ParseError(last_content, "header declares " + std::to_string(m) + " edges, found " + std::to_string(edges.size()));
    return Instance{Graph::with_vertices(static_cast<int>(n), edges), static_cast<int>(k.value_or(0))};
}

std::string serialize_instance(const Instance& inst) {
    const Graph& g = inst.graph;
    const auto& ids = g.vertices();
    bool compact = true;
    for (std::size_t i = 0; i < ids.size(); ++i)
        if (ids[i] != static_cast<Vertex>(i)) compact = false;

    std::ostringstream os;
    os << "k " << inst.k << "\n";
    if (!compact) {
        os << "# ids";
        for (Vertex v : ids) os << ' ' << v;
        os << "\n";
    }
    os << "p " << g.order() << ' ' << g.size() << "\n";
    for (const Edge& e : g.edges()) os << "e " << g.index_of(e.u) << ' ' << g.index_of(e.v) << "\n";
    return os.str();
}

}  // namespace tlp
