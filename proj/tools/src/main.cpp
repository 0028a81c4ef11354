#include <iostream>

#include "pair_radiance_cli/commands.hpp"

int main(int argc, char** argv) {
  return pair_radiance::cli::main_entry(argc, argv, std::cout, std::cerr);
}
