#include <iostream>
#include <string>
#include <vector>

#include "adp/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return adp::run_cli(args, std::cout, std::cerr);
}
