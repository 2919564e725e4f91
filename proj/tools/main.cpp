#include <iostream>
#include <string>
#include <vector>

#include "lpwr/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return lpwr::run_cli(args, std::cout);
}
