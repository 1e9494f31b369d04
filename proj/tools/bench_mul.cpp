// Times schoolbook against Karatsuba on q-binomial-sized operands and
// reports the crossover used for detail::kKaratsubaThreshold.
#include <chrono>
#include <cstdio>
#include <random>
#include <vector>

#include "qpos/laurent_poly.hpp"

using qpos::Integer;

namespace {

std::vector<Integer> random_coeffs(std::size_t n, std::mt19937_64& rng, int bits) {
  std::vector<Integer> v(n);
  gmp_randclass gr(gmp_randinit_default);
  gr.seed(rng());
  for (auto& c : v) c = gr.get_z_bits(bits);
  return v;
}

template <typename Fn>
double time_ms(Fn fn, int reps) {
  const auto t0 = std::chrono::steady_clock::now();
  for (int r = 0; r < reps; ++r) fn();
  const auto t1 = std::chrono::steady_clock::now();
  return std::chrono::duration<double, std::milli>(t1 - t0).count() / reps;
}

}  // namespace

int main() {
  std::mt19937_64 rng(7);
  std::printf("%8s %6s %12s", "size", "bits", "schoolbook");
  const std::size_t thresholds[] = {16, 24, 32, 40, 48, 64, 96};
  for (auto t : thresholds) std::printf(" %10s%-3zu", "kara@", t);
  std::printf("\n");
  for (std::size_t n : {64, 128, 256, 512, 1024, 2048}) {
    for (int bits : {20, 64, 256}) {
      const auto a = random_coeffs(n, rng, bits);
      const auto b = random_coeffs(n, rng, bits);
      std::vector<Integer> out(2 * n - 1);
      const int reps = n <= 256 ? 20 : 3;
      const double sb = time_ms(
          [&] {
            for (auto& c : out) c = 0;
            qpos::detail::mul_schoolbook(a, b, out);
          },
          reps);
      std::printf("%8zu %6d %12.3f", n, bits, sb);
      for (auto t : thresholds) {
        const double k = time_ms(
            [&] {
              for (auto& c : out) c = 0;
              qpos::detail::mul_karatsuba(a, b, out, t);
            },
            reps);
        std::printf(" %13.3f", k);
      }
      std::printf("\n");
    }
  }
  return 0;
}
