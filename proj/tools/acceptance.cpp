// one line per acceptance criterion; exit 1 if any fails or runs over its limit
#include "ctoda/suites.hpp"

#include <cstdio>
#include <cstdlib>

int main(int argc, char** argv) {
  ctoda::Scope scope;  // full scale: 5 points, 10 steps
  if (argc > 1) scope.seed = std::strtoul(argv[1], nullptr, 10);
  int failed = 0;
  for (const auto& c : ctoda::criteria()) {
    auto rep = c.run(scope);
    bool in_time = rep.seconds < c.limit_seconds;
    bool pass = rep.ok() && in_time;
    failed += !pass;
    std::printf("%s  [%2d] %-45s checks=%-6ld %.2fs (limit %.0fs)%s\n", pass ? "PASS" : "FAIL", c.id, c.title.c_str(),
                rep.checks, rep.seconds, c.limit_seconds, in_time ? "" : "  OVER TIME");
    for (const auto& f : rep.failures) std::printf("        %s\n", f.c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", (int)ctoda::criteria().size() - failed, ctoda::criteria().size());
  return failed ? 1 : 0;
}
