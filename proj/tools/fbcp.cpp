#include <iostream>

#include "bog/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return bog::run(args, std::cout, std::cerr);
}
