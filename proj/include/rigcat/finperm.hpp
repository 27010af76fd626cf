#ifndef RIGCAT_FINPERM_HPP
#define RIGCAT_FINPERM_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "rigcat/errors.hpp"

namespace rigcat {

/// Sizes and 1-indexed points of finite ordinals [n] = {1,...,n}.
using nat = std::uint64_t;

nat checked_add(nat a, nat b);
nat checked_mul(nat a, nat b);

/// A total map [m] -> [n]. Entries are 1-indexed; table()[i-1] is the image
/// of i. dom() == 0 is the empty map; dom() > 0 requires cod() > 0.
class FinMap {
public:
  FinMap() : cod_(0) {}
  FinMap(nat cod, std::vector<nat> table);

  nat dom() const { return table_.size(); }
  nat cod() const { return cod_; }
  const std::vector<nat> &table() const { return table_; }

  /// Image of the 1-indexed point i.
  nat operator()(nat i) const { return table_[i - 1]; }

  bool is_identity() const;
  bool is_bijective() const;

  friend bool operator==(const FinMap &a, const FinMap &b) = default;

private:
  nat cod_;
  std::vector<nat> table_;
};

/// A bijection [n] -> [n].
class Perm {
public:
  Perm() = default;
  explicit Perm(std::vector<nat> table);

  nat degree() const { return table_.size(); }
  const std::vector<nat> &table() const { return table_; }
  nat operator()(nat i) const { return table_[i - 1]; }

  bool is_identity() const;
  FinMap as_map() const { return FinMap(degree(), table_); }

  friend bool operator==(const Perm &a, const Perm &b) = default;
  bool operator<(const Perm &other) const { return table_ < other.table_; }

  /// Trusted constructor for tables already known to be bijections.
  static Perm unchecked(std::vector<nat> table);

private:
  struct unchecked_tag {};
  Perm(std::vector<nat> table, unchecked_tag) : table_(std::move(table)) {}

  std::vector<nat> table_;
};

/// Disjoint-cycle presentation with explicit ambient degree. Always kept
/// canonical: every cycle starts at its smallest point, cycles are sorted by
/// smallest point, fixed points are omitted.
class Cycles {
public:
  Cycles() : degree_(0) {}
  Cycles(nat degree, std::vector<std::vector<nat>> cycles);

  nat degree() const { return degree_; }
  const std::vector<std::vector<nat>> &cycles() const { return cycles_; }

  friend bool operator==(const Cycles &a, const Cycles &b) = default;

private:
  nat degree_;
  std::vector<std::vector<nat>> cycles_;
};

Perm identity(nat n);

/// g o f, applying f first. Requires f.cod() == g.dom().
FinMap compose(const FinMap &g, const FinMap &f);
Perm compose(const Perm &g, const Perm &f);

Perm invert(const Perm &p);

Cycles to_cycles(const Perm &p);
Perm from_cycles(const Cycles &c);

/// Multiplicative order (lcm of cycle lengths).
nat order(const Perm &p);

/// Canonical text form, e.g. "(2,3,5)_8(4,7,6)_8" and "()_3" for identities.
std::string print_cycles(const Cycles &c);
inline std::string print_cycles(const Perm &p) {
  return print_cycles(to_cycles(p));
}

/// Accepts a degree suffix after every cycle or a single trailing one;
/// whitespace-insensitive. Reports the byte offset of any syntax error.
Cycles parse_cycles(const std::string &text);

/// The transposition (i,i+1) in [n]. Requires 1 <= i <= n-1.
Perm adjacent_transposition(nat i, nat n);

/// Indices i such that composing (i,i+1) left-to-right (leftmost applied
/// last under the g o f convention) reproduces p. At most n(n-1)/2 long.
std::vector<nat> decompose_adjacent(const Perm &p);

/// Recomposition companion of decompose_adjacent.
Perm compose_adjacent(const std::vector<nat> &indices, nat n);

/// Debug/witness rendering of a FinMap, e.g. "[3->2: 1,2,1]".
std::string describe(const FinMap &f);

} // namespace rigcat

#endif
