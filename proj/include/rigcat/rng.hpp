#ifndef RIGCAT_RNG_HPP
#define RIGCAT_RNG_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "rigcat/finperm.hpp"
#include "rigcat/matrix.hpp"

namespace rigcat {

/// splitmix64 stream. Hand-rolled so that seeded reports are byte-identical
/// across platforms and standard libraries.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform value in [0, bound) via rejection; bound >= 1.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t limit = ~std::uint64_t{0} - ~std::uint64_t{0} % bound;
    std::uint64_t v;
    do {
      v = next();
    } while (v >= limit);
    return v % bound;
  }

  /// Derive an independent stream; used to make per-suite sampling
  /// insensitive to evaluation order.
  Rng fork(const std::string &label) {
    std::uint64_t h = 1469598103934665603ULL ^ state_;
    for (char c : label) {
      h ^= static_cast<unsigned char>(c);
      h *= 1099511628211ULL;
    }
    return Rng(h);
  }

private:
  std::uint64_t state_;
};

inline Perm random_perm(Rng &rng, nat degree) {
  std::vector<nat> table(degree);
  for (nat i = 0; i < degree; ++i)
    table[i] = i + 1;
  for (nat i = degree; i > 1; --i)
    std::swap(table[i - 1], table[rng.below(i)]);
  return Perm::unchecked(std::move(table));
}

/// Entries uniform in {-span,...,span}.
inline RatMatrix random_matrix(Rng &rng, nat rows, nat cols, int span = 3) {
  RatMatrix out(rows, cols);
  for (nat i = 1; i <= rows; ++i)
    for (nat j = 1; j <= cols; ++j)
      out.at(i, j) =
          Rational(static_cast<std::int64_t>(rng.below(2 * span + 1)) - span);
  return out;
}

inline RatMatrix random_invertible_matrix(Rng &rng, nat n, int span = 3) {
  if (n == 0)
    return RatMatrix(0, 0);
  while (true) {
    RatMatrix candidate = random_matrix(rng, n, n, span);
    try {
      mat_inverse(candidate);
      return candidate;
    } catch (const error &) {
      continue;
    }
  }
}

} // namespace rigcat

#endif
