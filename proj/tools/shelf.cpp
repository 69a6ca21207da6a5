#include <iostream>
#include <string>
#include <vector>

#include "shelf/cli.hpp"

int main(int argc, char **argv) {
  std::vector<std::string> args(argv, argv + argc);
  return shelf::cli::run(args, std::cout, std::cerr);
}
