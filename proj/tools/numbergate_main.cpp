#include <iostream>

#include "numbergate/cli.hpp"

int main(int argc, char** argv) {
  return numbergate::cli::run(argc, argv, std::cout, std::cerr);
}
