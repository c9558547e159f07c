#include <iostream>
#include <string>
#include <vector>

#include "ttt/cli.h"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return ttt::run_cli(args, std::cin, std::cout, std::cerr);
}
