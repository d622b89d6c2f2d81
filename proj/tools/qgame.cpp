#include <iostream>

#include "qgame/cli.hpp"

int main(int argc, char** argv) {
  try {
    return qgame::cli::run(argc, argv, std::cout, std::cerr);
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 1;
  }
}
