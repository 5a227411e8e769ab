#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "quadheis/io.hpp"

namespace quadheis {

struct RunConfig {
  Tolerances tol;
  int modes = 2;
  int cutoff = 20;
  std::string format = "json";  // json | csv
  std::uint64_t seed = 1;
};

// Reads the optional keys series_tol, sv_tol, branch_tol, modes, cutoff, format,
// seed over the defaults. Throws InputError on invalid values.
RunConfig config_from_json(const Json& j);

// Largest cutoff accepted for the given number of modes.
int max_cutoff(int modes);

// Exit codes: 0 success, 1 malformed input or usage, 2 domain error. Errors are
// written to `out` as a JSON object.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out);

}  // namespace quadheis
