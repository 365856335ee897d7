#include <iostream>
#include <string>
#include <vector>

#include "graphgen/cli.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv + 1, argv + argc);
  return graphgen::cli::run(args, std::cout, std::cerr);
}
