#include <iostream>

#include "rdfpg_tools/cli.hpp"

int main(int argc, char** argv) {
  return rdfpg::cli::run(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}
