#include <iostream>

#include "uniton/cli.hpp"

int main(int argc, char **argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return uniton::run_cli(args, std::cout, std::cerr);
}
