#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace addiword {

// Full command-line surface. Returns the process exit code: 0 when a
// witness was found (or a search exhausted), 1 for not-found or budget
// verdicts, 2 for usage and parse errors. The JSON report goes to `out`,
// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace addiword
