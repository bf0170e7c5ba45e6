#include <iostream>

#include "gdnp/cli.hpp"

int main(int argc, char** argv) {
  return gdnp::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
