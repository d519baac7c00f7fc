// Exact Stanley depth of the edge ideals of small complete bipartite graphs,
// next to the (n+2)/2 upper bound.

#include <chrono>
#include <iostream>

#include "sdepth/sdepth.hpp"

int main(int argc, char** argv) {
  const int max_n = argc > 1 ? std::stoi(argv[1]) : 8;
  for (int a = 2; 2 * a <= max_n; ++a)
    for (int b = a; a + b <= max_n; ++b) {
      const auto t0 = std::chrono::steady_clock::now();
      const auto inst = sdepth::complete_kpartite(2, {a, b});
      const auto poset = sdepth::build_poset(inst.clutter);
      const auto res = sdepth::exact_sdepth(poset);
      const auto ms =
          std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count();
      const auto bound = sdepth::bipartite_upper(a + b);
      std::cout << "K_{" << a << "," << b << "}: sdepth " << res.value << ", bound " << bound.numerator() << "/"
                << bound.denominator() << ", |P| " << poset.size() << ", " << ms << " ms\n";
    }
}
