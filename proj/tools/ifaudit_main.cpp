#include <iostream>
#include <string>
#include <vector>

#include "ifaudit/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return ifaudit::cli::main_entry(args, std::cout, std::cerr);
}
