#include <iostream>
#include <string>
#include <vector>

#include "help/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return help::cli::run(args, std::cout, std::cerr, help::cli::color_wanted());
}
