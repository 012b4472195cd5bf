#pragma once

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "divide_forge/divide.hpp"
#include "divide_forge/surface_map.hpp"

namespace dforge::test_support {

inline std::vector<Dart> random_permutation(std::size_t n, std::mt19937& rng) {
  std::vector<Dart> p(n);
  std::iota(p.begin(), p.end(), 0U);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

inline Divide random_relabel(const Divide& d, std::mt19937& rng) {
  const auto label = random_permutation(d.map().dart_count(), rng);
  return Divide(d.map().relabeled(label), d.free_loops());
}

// Independent face count: orbits of succ o pair computed with plain arrays.
inline std::size_t orbit_count(std::span<const Dart> succ, std::span<const Dart> pair) {
  std::vector<bool> seen(succ.size(), false);
  std::size_t orbits = 0;
  for (Dart d = 0; d < succ.size(); ++d) {
    if (seen[d]) continue;
    ++orbits;
    for (Dart x = d; !seen[x]; x = succ[pair[x]]) seen[x] = true;
  }
  return orbits;
}

inline std::size_t cycle_count(std::span<const Dart> perm) {
  std::vector<bool> seen(perm.size(), false);
  std::size_t cycles = 0;
  for (Dart d = 0; d < perm.size(); ++d) {
    if (seen[d]) continue;
    ++cycles;
    for (Dart x = d; !seen[x]; x = perm[x]) seen[x] = true;
  }
  return cycles;
}

}  // namespace dforge::test_support
