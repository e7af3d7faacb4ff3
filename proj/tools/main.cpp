#include <iostream>
#include <vector>

#include "operads/cli.hpp"

int main(int argc, char** argv) {
  return operads::cli_run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
