#include <iostream>
#include <string>
#include <vector>

#include "polyenum/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return polyenum::runCli(args, std::cout, std::cerr);
}
