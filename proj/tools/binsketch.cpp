#include <iostream>
#include <string>
#include <vector>

#include "binsketch/cli.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv, argv + argc);
  return binsketch::cli::run(args, std::cout, std::cerr);
}
