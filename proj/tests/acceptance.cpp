// Prints one PASS/FAIL line per acceptance criterion; nonzero exit if any fails.

#include "gc/verify.hpp"

#include <cstdio>
#include <cstdlib>
#include <string>

int main(int argc, char** argv) {
  gc::VerifyOptions opt;
  if (argc > 1) opt.level = argv[1];
  if (const char* s = std::getenv("GC_SEED")) opt.seed = static_cast<unsigned>(std::stoul(s));
  int failed = 0;
  gc::run_suite(opt, [&](const gc::CriterionResult& r) {
    std::printf("%s criterion %d: %s (%.1f s)\n", r.pass ? "PASS" : "FAIL", r.id, r.name.c_str(), r.seconds);
    std::printf("    %s\n", r.detail.c_str());
    std::fflush(stdout);
    failed += !r.pass;
  });
  std::printf("%d criteria failed\n", failed);
  return failed ? 1 : 0;
}
