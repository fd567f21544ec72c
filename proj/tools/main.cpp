#include <iostream>

#include "colorcode/cli.hpp"

int main(int argc, char** argv) {
  return colorcode::run_cli(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
