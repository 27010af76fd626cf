#ifndef RIGCAT_SKELRIG_HPP
#define RIGCAT_SKELRIG_HPP

#include <utility>

#include "rigcat/finperm.hpp"

namespace rigcat {

// Structure maps of the skeletal category of finite sets: the objects are
// the sizes n (standing for [n] = {1,...,n}), the morphisms are FinMaps,
// and sums/products of objects are m+n and m*n on the nose. All maps below
// are given by the closed formulas; the oracle_* twins at the bottom of
// this header recompute them from the universal-property definitions on
// explicit tagged-union / pair representations.

/// f+g on [f.dom+g.dom]: f on the first block, g shifted after it.
FinMap sum_map(const FinMap &f, const FinMap &g);
Perm sum_map(const Perm &f, const Perm &g);

/// f*g on [f.dom*g.dom] under the row-major pairing (i,j) |-> (j-1)m+i.
FinMap prod_map(const FinMap &f, const FinMap &g);
Perm prod_map(const Perm &f, const Perm &g);

/// The additive braiding c[m,n] : [m+n] -> [n+m], block rotation.
Perm add_commutator(nat m, nat n);

/// The multiplicative braiding c'[m,n] : [mn] -> [nm], lattice transpose.
Perm mult_commutator(nat m, nat n);

/// The canonical iso [mp+np] -> [(m+n)p] interleaving the two blocks
/// ("distributor written toward the merged product"). Identity whenever
/// one of m, n, p is zero.
Perm right_distributor(nat m, nat n, nat p);

/// Its inverse [(m+n)p] -> [mp+np], the orientation rig instances expose.
Perm right_distributor_inv(nat m, nat n, nat p);

/// The left analogue [mn+mp] -> [m(n+p)], always the identity here.
Perm left_distributor(nat m, nat n, nat p);

/// Coproduct injections iota1 : [m] -> [m+n], iota2 : [n] -> [m+n].
std::pair<FinMap, FinMap> injections(nat m, nat n);

/// Product projections pi1 : [mn] -> [m], pi2 : [mn] -> [n].
/// Requires m, n >= 1.
std::pair<FinMap, FinMap> projections(nat m, nat n);

/// Remainder of x by k with multiples of k mapped to k instead of 0.
nat mod_remainder(nat k, nat x);

/// Flat indexing of the tagged union [m] | [n] into [m+n].
struct SumIndexing {
  nat m, n;
  enum class Side { first, second };

  nat to_flat(nat k, Side side) const;
  std::pair<nat, Side> from_flat(nat v) const;
};

/// Flat indexing of the pair grid [m] x [n] into [mn], rows first.
struct ProdIndexing {
  nat m, n;

  nat to_flat(nat i, nat j) const;
  std::pair<nat, nat> from_flat(nat k) const;
};

/// sigma[i,p] = (i,i+1)(i+2,i+3)... in S_2p. Requires 2 <= i <= p.
Perm sigma_factor(nat i, nat p);

/// sigma[2,p] o ... o sigma[p,p]; equals right_distributor(1,1,p).
Perm distributor_via_sigma(nat p);

// Universal-property twins. Each recomputes its closed-form sibling from
// the coproduct/product diagrams on tagged representations, so agreement
// is a genuine cross-check.
FinMap oracle_sum(const FinMap &f, const FinMap &g);
FinMap oracle_prod(const FinMap &f, const FinMap &g);
Perm oracle_add_comm(nat m, nat n);
Perm oracle_mult_comm(nat m, nat n);
Perm oracle_right_dist(nat m, nat n, nat p);
Perm oracle_left_dist(nat m, nat n, nat p);

} // namespace rigcat

#endif
