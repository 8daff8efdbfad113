#include <iostream>
#include <string>
#include <vector>

#include "cutsetlab/cli.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv, argv + argc);
  return cutsetlab::cli::run(args, std::cout, std::cerr);
}
