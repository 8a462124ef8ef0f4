#include <iostream>
#include <string>
#include <vector>

#include "ninv/cli.hpp"

int main(int argc, char** argv) {
  std::ios_base::sync_with_stdio(false);
  const std::vector<std::string> args(argv + 1, argv + argc);
  return ninv::cli::run_cli(args, std::cout, std::cerr);
}
