#include <iostream>
#include <string>
#include <vector>

#include "eiscomp/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return eiscomp::cli::run_cli(args, std::cout, std::cerr);
}
