#include <iostream>
#include <string>
#include <vector>

#include "flowlab/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return flowlab::cli::dispatch(args, std::cout, std::cerr);
}
