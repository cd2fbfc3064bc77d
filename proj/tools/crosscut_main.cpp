#include <iostream>
#include <string>
#include <vector>

#include "crosscut/cli.hpp"

int main(int argc, char** argv) {
  return crosscut::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
