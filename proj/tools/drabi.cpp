#include <iostream>
#include <string>
#include <vector>

#include "drabi/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return drabi::cli::run(args, std::cout, std::cerr);
}
