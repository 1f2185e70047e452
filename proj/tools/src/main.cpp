#include <cstdlib>
#include <iostream>

#include <unistd.h>

#include "avgindep/cli.hpp"

int main(int argc, char** argv) {
  const bool color = std::getenv("NO_COLOR") == nullptr && isatty(STDOUT_FILENO) != 0;
  return avgindep::cli::run(argc, argv, std::cout, std::cerr, color);
}
