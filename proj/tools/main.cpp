#include <iostream>

#include "triptych/cli.hpp"

int main(int argc, char** argv) {
  return triptych::cli::run(argc, argv, std::cout, std::cerr, std::cin);
}
