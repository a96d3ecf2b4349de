#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace drabi::cli {

// Effective run parameters: defaults, overridden by a JSON config file,
// overridden by command-line flags (most specific wins).
struct RunConfig {
  std::string model = "rm";  // grm | rm | two_photon | two_mode
  double gamma = 1.0;
  double mu = 0.0;
  double k1 = 0.0;
  double k2 = 0.0;
  double q = 0.25;
  double delta = 0.0;
  int parity = 0;  // 0 both, +1 / -1 restrict
  int count = 20;
  double tol = 1e-10;
  int nmax_cap = 16384;
  std::string sweep;  // "param:lo:hi:steps", empty = none
  std::string out = "-";
  std::string format = "csv";  // csv | json
};

// Parsed sweep request.
struct SweepRange {
  std::string parameter;
  double lo = 0.0;
  double hi = 0.0;
  int steps = 0;
};

// Strict parse of a config file: unknown keys, wrong types, or malformed
// JSON raise a usage error.
RunConfig load_config(const std::string& path);

// Parses "param:lo:hi:steps"; throws a usage error on malformed input.
SweepRange parse_sweep(const std::string& text);

// Full command dispatch.  args excludes the program name.  Returns the
// process exit code: 0 success, 1 verification/invariant failure, 2 partial
// results (convergence failure), 64 usage or config error.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace drabi::cli
