#include <iostream>

#include "nonpasch/cli.hpp"

int main(int argc, char** argv) {
  return nonpasch::cli::run_cli({argv + 1, argv + argc}, std::cout, std::cerr);
}
