// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <cstdlib>
#include <iostream>

#include "crysrig/acceptance.hpp"

int main(int argc, char** argv) {
  crysrig::AcceptanceConfig cfg;
  if (argc > 1) cfg.seed = std::strtoull(argv[1], nullptr, 10);
  if (argc > 2) cfg.scale = std::strtod(argv[2], nullptr);
  bool ok = true;
  double total = 0;
  crysrig::run_acceptance(cfg, [&](const crysrig::CriterionResult& r) {
    ok = ok && r.passed;
    total += r.seconds;
    std::cout << crysrig::format_result(r) << std::endl;
  });
  std::cout << "total: " << total << " s, " << (ok ? "all criteria pass" : "FAILURES") << std::endl;
  return ok ? EXIT_SUCCESS : EXIT_FAILURE;
}
