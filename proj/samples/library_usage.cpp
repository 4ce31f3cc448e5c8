// Minimal use of the header-only library: build the generators at one
// parameter, check the invariant form and enumerate the d = 2 group.
//
//   g++ -std=c++20 -O2 -Iinclude -Ivendor -I/usr/include/eigen3 samples/library_usage.cpp

#include <iostream>

#include "kzlab/kzlab.hpp"

int main() {
  using namespace kzlab;
  const AlphaParam alpha = AlphaParam::parse("3/10");

  auto G = build_generators(6, alpha);
  auto Q = build_form(6, alpha);
  bool invariant = true;
  for (const auto& L : G.top) invariant = invariant && Q.invariant_under(L);
  auto sig = diagonalize_form(6, alpha).signature;
  std::cout << "d=6 alpha=" << alpha.to_string() << ": Q invariant " << std::boolalpha << invariant << ", signature ("
            << sig.n_minus << ", " << sig.n_plus << ")\n";

  auto group = enumerate_d2_group(AlphaParam(1, 4));
  std::cout << "<L_-1, L_1> at alpha=1/4 has order " << *group.order << "\n";

  auto D = build_diagram(5);
  std::cout << "D_5 has " << D.size() << " vertices and " << elementary_loops(D).size() << " elementary loops\n";
}
