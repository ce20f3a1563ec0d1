#include <iostream>
#include <string>
#include <vector>

#include "pavane/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return pavane::cli::run_cli(args, std::cout, std::cerr);
}
