#include <iostream>

#include "quadheis/cli.hpp"

int main(int argc, char** argv) {
  return quadheis::run_cli({argv + 1, argv + argc}, std::cin, std::cout);
}
