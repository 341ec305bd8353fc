#include <iostream>

#include "d4fs/cli.hpp"

int main(int argc, char** argv) {
  return d4fs::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
