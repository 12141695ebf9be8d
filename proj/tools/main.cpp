#include <iostream>

#include "hcover/cli.hpp"

int main(int argc, char** argv) {
  return hcover::run_command(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
