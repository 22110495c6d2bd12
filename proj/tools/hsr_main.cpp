#include <iostream>
#include <string>
#include <vector>

#include "hsr/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return hsr::run_cli(args, std::cout, std::cerr);
}
