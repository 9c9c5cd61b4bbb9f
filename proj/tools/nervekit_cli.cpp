#include <iostream>

#include "nervekit/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return nervekit::dispatch(args, std::cout, std::cerr);
}
