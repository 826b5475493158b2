#include <iostream>

#include "sqfiber/cli.hpp"

int main(int argc, char** argv) {
  return sqfiber::run_cli(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
