#include <iostream>

#include "omega/tools/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return omega::tools::run_cli(args, std::cout, std::cerr);
}
