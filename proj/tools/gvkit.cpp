#include <iostream>

#include "gvkit/cli.hpp"

int main(int argc, char** argv) {
  return gvkit::cli::run({argv + 1, argv + argc}, std::cout, std::cerr);
}
