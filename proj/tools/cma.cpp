#include "cma/cli.h"

#include <iostream>

int main(int argc, char** argv)
{
  const std::vector<std::string> args(argv + 1, argv + argc);
  const cma::cli::Result r = cma::cli::run(args);
  std::cout << r.out;
  std::cerr << r.err;
  return r.exit_code;
}
