#include <iostream>

#include "qfib/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  try {
    return qfib::cli::run(args, std::cout, std::cerr);
  } catch (const std::exception& e) {
    std::cerr << "error (internal error): " << e.what() << "\n";
    return qfib::cli::kInternal;
  }
}
