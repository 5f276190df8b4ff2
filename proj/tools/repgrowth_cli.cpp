#include <iostream>

#include "repgrowth/commands.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return repgrowth::run_cli(args, std::cout, std::cerr);
}
