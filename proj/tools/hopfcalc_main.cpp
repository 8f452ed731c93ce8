#include <iostream>
#include <vector>

#include "hopfcalc/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return hopfcalc::run_command(args, std::cout, std::cerr);
}
