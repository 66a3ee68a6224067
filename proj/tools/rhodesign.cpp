#include <iostream>

#include "rhodesign/cli.hpp"

int main(int argc, char** argv) {
  return rhodesign::cli::run(argc, argv, std::cin, std::cout, std::cerr);
}
