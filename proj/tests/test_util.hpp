#ifndef RIGCAT_TEST_UTIL_HPP
#define RIGCAT_TEST_UTIL_HPP

#include <algorithm>
#include <numeric>
#include <vector>

#include "rigcat/finperm.hpp"
#include "rigcat/rng.hpp"

namespace rigcat::testutil {

inline std::vector<Perm> all_perms(nat n) {
  std::vector<nat> table(n);
  std::iota(table.begin(), table.end(), nat{1});
  std::vector<Perm> out;
  do {
    out.push_back(Perm(table));
  } while (std::next_permutation(table.begin(), table.end()));
  return out;
}

/// Every total map [m] -> [cod], enumerated in base-cod counting order.
inline std::vector<FinMap> all_maps(nat m, nat cod) {
  std::vector<FinMap> out;
  if (m == 0) {
    out.push_back(FinMap(cod, {}));
    return out;
  }
  if (cod == 0)
    return out;
  std::vector<nat> table(m, 1);
  while (true) {
    out.push_back(FinMap(cod, table));
    nat pos = 0;
    while (pos < m && table[pos] == cod) {
      table[pos] = 1;
      ++pos;
    }
    if (pos == m)
      break;
    ++table[pos];
  }
  return out;
}

inline FinMap random_map(Rng &rng, nat m, nat cod) {
  std::vector<nat> table(m);
  for (nat i = 0; i < m; ++i)
    table[i] = 1 + rng.below(cod);
  return FinMap(cod, std::move(table));
}

} // namespace rigcat::testutil

#endif
