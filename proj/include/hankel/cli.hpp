#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace hankel::cli {

/// Command-line front end. args excludes the program name. Returns the
/// process exit code: 0 clean, 1 invariant violation, 2 usage or domain
/// error, 3 mismatch-only findings.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Range syntax "A:B:N" -> N equally spaced points including both ends;
/// a plain number parses as a single point.
std::vector<double> parse_range(const std::string& text);

}  // namespace hankel::cli
