#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "lsc/cover_model.hpp"
#include "lsc/gadgets.hpp"
#include "lsc/instance.hpp"

namespace lsc {

// Text formats.
//
// Instance ("LSC v1"):
//   LSC 1
//   # name: <text>          optional metadata, still a comment
//   # source: <text>
//   x1 y1 x2 y2             one segment per line, decimal integers
// '#' starts a comment anywhere on a line; blank lines are ignored.
//
// Solution:  "SOL <size>" then the chosen ids ascending, one per line.
// Graph:     "n m" then m lines "i j" (0-based).
// Roles:     one line per segment: "<id> <role>", e.g. "7 E 0 1 h".

// Throws ParseError (with 1-based line number) on malformed text, and the
// validation errors of `validate` on geometric violations.
Instance parse_instance(std::istream& in, const std::string& fallback_name = "");
Instance parse_instance_text(const std::string& text, const std::string& fallback_name = "");
std::string emit_instance(const Instance& inst);

Cover parse_solution(std::istream& in);
std::string emit_solution(const Cover& cover);

Graph parse_graph(std::istream& in);
std::string emit_graph(const Graph& g);

std::vector<SegmentRole> parse_roles(std::istream& in);
std::string emit_roles(const std::vector<SegmentRole>& roles);

std::string read_file(const std::string& path);
// Writes via a temporary file and rename, so readers never see a partial file.
void write_file_atomic(const std::string& path, const std::string& contents);

Instance load_instance(const std::string& path);

}  // namespace lsc
