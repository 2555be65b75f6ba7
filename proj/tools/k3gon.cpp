#include <iostream>
#include <string>
#include <vector>

#include "k3gon/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return k3gon::cli::run(args, std::cout, std::cerr);
}
