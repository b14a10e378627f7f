#include <cstdlib>
#include <iostream>
#include <string>

#include "ugdual/acceptance/suites.hpp"

int main(int argc, char** argv) {
  std::uint64_t seed = 7;
  if (argc > 1) seed = std::stoull(argv[1]);
  int failed = 0;
  for (int id = 1; id <= ugdual::acceptance::kSuiteCount; ++id) {
    const auto r = ugdual::acceptance::run_suite(id, seed);
    std::cout << ugdual::acceptance::format_line(r, true) << std::endl;
    if (!r.ok()) ++failed;
  }
  std::cout << (ugdual::acceptance::kSuiteCount - failed) << "/" << ugdual::acceptance::kSuiteCount
            << " acceptance criteria pass" << std::endl;
  return failed == 0 ? EXIT_SUCCESS : EXIT_FAILURE;
}
