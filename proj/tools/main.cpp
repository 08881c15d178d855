#include <iostream>

#include "mixgeo/cli.hpp"

int main(int argc, char** argv) {
  return mixgeo::cli::run(argc, argv, std::cout, std::cerr);
}
