#include <iostream>

#include "gonseq/cli.hpp"

int main(int argc, char** argv) {
  return gonseq::run_cli(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
