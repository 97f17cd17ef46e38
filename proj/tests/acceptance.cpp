#include <cstdio>
#include <cstdlib>

#include "wwdtn/wwdtn.h"

// One line per criterion; exit status 1 if any criterion fails.
int main(int argc, char** argv) {
  const int count = wwdtn_acceptance_count();
  const int only = argc > 1 ? std::atoi(argv[1]) : 0;
  int passed = 0, run = 0;
  for (int id = 1; id <= count; ++id) {
    if (only && id != only) continue;
    wwdtn_criterion r{};
    if (wwdtn_acceptance_run(id, &r) != WWDTN_OK) {
      std::printf("FAIL [%d] %s\n", id, wwdtn_last_error());
    } else {
      std::printf("%s [%d] %s: %s (%.2f s / %.0f s)\n", r.passed ? "PASS" : "FAIL", r.id, r.name, r.detail, r.seconds, r.budget);
      passed += r.passed;
    }
    ++run;
    std::fflush(stdout);
  }
  std::printf("%d/%d criteria passed\n", passed, run);
  return passed == run ? 0 : 1;
}
