#include <iostream>
#include <string>
#include <vector>

#include "qpos/cli.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv, argv + argc);
  return qpos::cli::run(args, std::cout, std::cerr);
}
