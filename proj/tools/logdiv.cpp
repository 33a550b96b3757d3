#include <iostream>

#include "logdiv/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return logdiv::cli::run(args, std::cout, std::cerr);
}
