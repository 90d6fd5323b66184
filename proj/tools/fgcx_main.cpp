#include <iostream>
#include <string>
#include <vector>

#include "fgcx/pipeline.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return fgcx::run_cli(args, std::cout, std::cerr);
}
