#include <iostream>

#include "ordcalc/cli.hpp"

int main(int argc, char** argv) {
  return ordcalc::cli::run({argv + 1, argv + argc}, std::cout, std::cerr);
}
