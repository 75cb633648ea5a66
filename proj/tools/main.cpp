#include <iostream>

#include "bbmirror/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return bbm::cli::run(args, std::cout, std::cerr);
}
