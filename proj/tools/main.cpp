#include <iostream>

#include "zonal/cli.hpp"

int main(int argc, char** argv) {
  return zonal::run_cli(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
