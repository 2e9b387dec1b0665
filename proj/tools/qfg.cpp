#include <iostream>
#include <string>
#include <vector>

#include "qfgaps/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return qfg::cli::run(args, std::cout, std::cerr);
}
