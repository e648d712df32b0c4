#ifndef CCGT_TOOLS_DISPATCH_HPP
#define CCGT_TOOLS_DISPATCH_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace ccgt::cli {

/// Runs one subcommand. JSON report on `out`, logs on `err`.
/// Exit codes: 0 pass, 1 fail/counterexample, 2 inconclusive,
/// 3 malformed input.
int dispatch(const std::vector<std::string> &args, std::ostream &out,
             std::ostream &err);

} // namespace ccgt::cli

#endif
