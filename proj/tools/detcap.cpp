#include <iostream>

#include "detcap/cli.hpp"

int main(int argc, char** argv) {
  return detcap::run_cli(argc, argv, std::cout, std::cerr);
}
