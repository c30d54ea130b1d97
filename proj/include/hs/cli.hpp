#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hs {

/// Runs the hurwitz command line (args excludes the program name) and
/// returns the exit code: 0 iff every requested computation and check
/// succeeded, 1 on a failed check or golden mismatch, 2 on usage or
/// computation errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// "3", "0..3" or "2..2". Throws ParseError on malformed or empty ranges.
std::pair<int, int> parse_range(const std::string& text);

}  // namespace hs
