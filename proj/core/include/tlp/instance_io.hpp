#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "tlp/instance.hpp"

namespace tlp {

/// Malformed instance text. what() starts with "line <n>: ".
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& message);
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

// Text format:
//
//   k <int>        optional, at most once, before the header
//   p <n> <m>      header; vertices are 0..n-1
//   e <u> <v>      exactly m edge lines
//
// Blank lines and lines starting with '#' are ignored. Self-loops, duplicate
// edges, out-of-range ids and edge-count mismatches are rejected.
Instance parse_instance(std::string_view text);

/// Writes the `k` line and the graph. Ids are compacted to 0..n-1 in
/// ascending order; when the input ids were not already 0..n-1 an
/// `# ids` comment lists the original id of each compacted vertex.
std::string serialize_instance(const Instance& inst);

}  // namespace tlp
