#include <iostream>

#include "polysum/cli.hpp"

int main(int argc, char** argv) {
  return polysum::cli::run({argv + 1, argv + argc}, std::cout, std::cerr);
}
