#include <iostream>
#include <string>
#include <vector>

#include "tribound/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return tribound::run(args, std::cout, std::cerr);
}
