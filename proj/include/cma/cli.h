#pragma once

#include <string>
#include <vector>

namespace cma::cli
{

enum ExitCode : int
{
  kOk = 0,
  kVerifyFailed = 1,
  kInputError = 2,
  kNumericError = 3,
  kConsistencyError = 4
};

struct Result
{
  int exit_code = kOk;
  std::string out;
  std::string err;
};

/// Run the command line (without the program name). Output goes to `out`
/// unless --out names a file.
Result run(const std::vector<std::string>& args);

} // namespace cma::cli
