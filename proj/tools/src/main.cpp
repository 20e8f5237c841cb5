#include <iostream>
#include <string>
#include <vector>

#include "ddgen/cli.hpp"

int main(int argc, char** argv) {
  std::ios::sync_with_stdio(false);
  std::vector<std::string> args(argv + 1, argv + argc);
  ddgen::cli::RunConfig cfg;
  try {
    cfg = ddgen::cli::parse_args(args);
  } catch (const ddgen::cli::HelpRequested& h) {
    std::cout << h.what();
    return 0;
  } catch (const ddgen::cli::UsageError& e) {
    std::cerr << "ddgen: " << e.what() << "\nRun 'ddgen --help' for usage.\n";
    return 2;
  }
  return ddgen::cli::run(cfg, std::cout, std::cerr);
}
