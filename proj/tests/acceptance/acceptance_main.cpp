// One PASS/FAIL line per acceptance criterion; exit status 1 if any failed.
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <string>

#include "normcov/report.hpp"

int main(int argc, char** argv) {
  normcov::AcceptanceOptions options;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--c5") == 0) {
      options.optimalno_c5 = true;
    } else if (std::strcmp(argv[i], "--only") == 0 && i + 1 < argc) {
      options.only.insert(std::atoi(argv[++i]));
    } else if (std::strcmp(argv[i], "--seed") == 0 && i + 1 < argc) {
      options.seed = std::strtoull(argv[++i], nullptr, 10);
    } else {
      std::fprintf(stderr, "usage: %s [--seed N] [--only ID]... [--c5]\n", argv[0]);
      return 2;
    }
  }
  int failed = 0;
  options.on_result = [&](const normcov::CriterionResult& r) {
    if (!r.passed) ++failed;
    std::printf("%s criterion %2d (%.2fs): %s -- %s\n", r.passed ? "PASS" : "FAIL", r.id, r.seconds,
                r.title.c_str(), r.detail.c_str());
    std::fflush(stdout);
  };
  normcov::run_acceptance(options);
  return failed == 0 ? 0 : 1;
}
