// Prints the first few entries of both auxiliary families, their real roots,
// and whether consecutive entries interlace.

#include <cstdio>

#include "hyperop/hyperop.hpp"

using namespace hyperop;

int main() {
  for (const Family family : {Family::Xi, Family::Lambda}) {
    const SequenceCache aux = aux_family(family, 6);
    std::printf("%s\n", to_string(family).c_str());
    for (unsigned n = 1; n <= aux.n_max(); ++n) {
      const RatPoly& p = aux.at(n);
      std::printf("  n=%u  lc=%s  roots:", n, to_string(p.leading()).c_str());
      for (const double r : isolate(p).approx()) std::printf(" %.6f", r);
      if (n > 1) {
        const auto v = interlace(isolate(aux.at(n - 1)), isolate(p), true);
        std::printf("   vs previous: %s", to_string(v.kind).c_str());
      }
      std::printf("\n");
    }
  }
  return 0;
}
