#include <iostream>

#include "lrkit_cli/cli.hpp"

int main(int argc, char** argv) {
  return lrkit::cli::parse_and_dispatch(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}
