#include <cstdlib>
#include <iostream>

#include "loopforge/verify.hpp"

int main(int argc, char** argv) {
  loopforge::VerifyOptions options;
  if (argc > 1) options.seed = std::strtoull(argv[1], nullptr, 10);
  bool all = true;
  auto results = loopforge::run_verification(options, [&](loopforge::CriterionResult const& r) {
    std::cout << loopforge::format_result(r) << '\n' << std::flush;
  });
  for (auto const& r : results) all = all && r.passed();
  std::cout << (all ? "acceptance: all criteria passed" : "acceptance: FAILED") << '\n';
  return all ? EXIT_SUCCESS : EXIT_FAILURE;
}
