// SPDX-License-Identifier: Apache-2.0
#include "affino/app.hpp"

#include <iostream>

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return affino::cli::run(args, std::cin, std::cout, std::cerr);
}
