#include <iostream>

#include "qlab_cli/cli.hpp"

int main(int argc, char** argv) {
  return qlab::cli::run({argv + 1, argv + argc}, std::cout, std::cerr);
}
