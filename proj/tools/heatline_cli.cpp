#include <iostream>

#include <heatline/commands.hpp>

int main(int argc, char** argv) {
  return heatline::run_cli(argc, argv, std::cout, std::cerr);
}
