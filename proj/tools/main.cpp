#include <iostream>

#include "isoper/cli.hpp"

int main(int argc, char** argv) {
  std::ios::sync_with_stdio(false);
  return isoper::run_command(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
