// Compares the zeros of P_n (c = 1, d = 1/2) with the limiting quantile law.

#include <cstdio>

#include "hyperop/hyperop.hpp"

using namespace hyperop;

int main() {
  const FamilySpec spec{Family::Xi, 1, rational(1, 2), Scaling::standard()};
  for (const unsigned n : {10u, 25u, 50u}) {
    const DistReport r = compare_distribution(spec, n);
    std::printf("n=%-3u ks=%.5f  max|F(x_kn)-k/n|=%.5f\n", n, r.ks, r.max_cdf_gap);
  }
  const DistReport r = compare_distribution(spec, 10);
  std::printf("\n  k      x_kn   F^-1(k/n)\n");
  for (const auto& q : r.quantile_errors) std::printf("%3u  %.6f  %.6f\n", q.k, q.x_kn, q.predicted);
  return 0;
}
