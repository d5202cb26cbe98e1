#include <iostream>

#include "weddle_cli/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return weddle::cli::run(args, std::cout, std::cerr);
}
