#pragma once

namespace skewent {

/// Exit codes of the command line front end.
enum ExitCode : int {
  kExitOk = 0,
  kExitNotViolated = 1,
  kExitUsage = 2,
  kExitValidation = 3,
};

int cli_main(int argc, char** argv);

}  // namespace skewent
