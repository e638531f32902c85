#include <iostream>
#include <string>
#include <vector>

#include "advbound/cli/cli.h"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return advbound::cli::run(args, std::cout, std::cerr);
}
