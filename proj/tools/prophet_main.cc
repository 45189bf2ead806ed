#include <iostream>
#include <string>
#include <vector>

#include "prophet/cli/cli.h"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return prophet::cli::run(args, std::cout, std::cerr);
}
