#include <iostream>

#include "jref/cli.hpp"

int main(int argc, char** argv) {
  std::ios::sync_with_stdio(false);
  return jref::cli::main(argc, argv, {std::cin, std::cout, std::cerr});
}
