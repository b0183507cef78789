#pragma once

// The command-line surface: one dispatcher exposing every library module
// with machine-readable output.  Results are wrapped in a JSON envelope
// {command, inputs, result, exact} printed with sorted keys and two-space
// indentation, so identical argument vectors yield byte-identical stdout.
// Exact values are serialized symbolically; `--approx` appends decimal
// renderings with twenty significant digits.

#include <iosfwd>
#include <string>
#include <vector>

namespace fivefold {

// Run the interface on `args` (program name excluded).  Normal output goes
// to `out`, diagnostics to `err`.  Returns the process exit code:
//   0  success
//   2  usage error (unknown command, bad flag, out-of-range option)
//   1  domain error; the stable fault name is the first token on err
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace fivefold
