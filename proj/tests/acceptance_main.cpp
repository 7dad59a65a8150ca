#include <cstdlib>
#include <iostream>
#include <string>

#include "sbal/acceptance.hpp"

int main(int argc, char** argv) {
  std::size_t threads = sbal::default_threads();
  if (argc > 1) threads = std::stoul(argv[1]);
  const auto results = sbal::acceptance::run_all(
      threads, [](const auto& o) { std::cout << sbal::acceptance::format_line(o) << std::endl; });
  return sbal::acceptance::all_passed(results) ? EXIT_SUCCESS : EXIT_FAILURE;
}
