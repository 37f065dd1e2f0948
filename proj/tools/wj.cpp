#include <iostream>

#include "wj/cli/run.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return wj::cli::run(args, std::cout, std::cerr);
}
