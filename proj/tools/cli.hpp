#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "config.hpp"

namespace hardsq::cli {

enum ExitCode : int {
  kOk = 0,
  kFailure = 1,
  kInvalidArguments = 2,
  kCapExceeded = 3,
};

/// Runs one command line (args excludes the program name). `env` defaults to
/// the process environment.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
            const EnvLookup& env = {});

}  // namespace hardsq::cli
