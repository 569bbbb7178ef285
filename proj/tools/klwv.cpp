#include <iostream>
#include <string>
#include <vector>

#include "klwv/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  try {
    return klwv::run(args, std::cout, std::cerr);
  } catch (const std::exception& e) {
    std::cerr << "klwv: internal error: " << e.what() << "\n";
    return 3;
  }
}
