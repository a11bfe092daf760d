#include <iostream>
#include <string>
#include <vector>

#include "fdrctl/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return fdrctl::run_cli(args, std::cout, std::cerr);
}
