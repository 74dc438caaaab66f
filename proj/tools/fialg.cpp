#include <iostream>
#include <string>
#include <vector>

#include "fialg/cli.hpp"

int main(int argc, char** argv) {
  return fialg::cli::run(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}
