#include <iostream>
#include <string>
#include <vector>

#include "bpm/cli.hpp"

int main(int argc, char** argv) {
  return bpm::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
