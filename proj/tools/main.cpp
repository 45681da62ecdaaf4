#include <iostream>

#include "incalg/cli.hpp"

int main(int argc, char** argv) {
  return incalg::run_cli(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
