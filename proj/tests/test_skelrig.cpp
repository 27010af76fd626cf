#include "doctest.h"

#include "rigcat/skelrig.hpp"
#include "test_util.hpp"

using namespace rigcat;
using testutil::all_maps;
using testutil::all_perms;
using testutil::random_map;

TEST_CASE("sum of maps") {
  CHECK(sum_map(identity(1), identity(1)) == identity(2));

  const FinMap g(3, {2, 2, 1});
  CHECK(sum_map(FinMap(0, {}), g) == g);

  const Perm swap2 = adjacent_transposition(1, 2);
  CHECK(print_cycles(sum_map(swap2, swap2)) == "(1,2)_4(3,4)_4");
}

TEST_CASE("product of maps") {
  for (nat m = 0; m <= 4; ++m)
    for (nat n = 0; n <= 4; ++n)
      CHECK(prod_map(identity(m), identity(n)) == identity(m * n));

  const FinMap f(3, {2, 2, 1});
  CHECK(prod_map(f, FinMap(1, {1})) == f);
  CHECK(prod_map(FinMap(1, {1}), f) == f);

  const Perm swap2 = adjacent_transposition(1, 2);
  CHECK(print_cycles(prod_map(swap2, identity(2))) == "(1,2)_4(3,4)_4");
}

TEST_CASE("additive commutator closed forms") {
  CHECK(add_commutator(0, 5) == identity(5));
  CHECK(add_commutator(5, 0) == identity(5));
  CHECK(print_cycles(add_commutator(1, 2)) == "(1,3,2)_3");
  CHECK(print_cycles(add_commutator(2, 1)) == "(1,2,3)_3");

  for (nat n = 1; n <= 10; ++n) {
    // (1,n+1,n,...,2) and (1,2,...,n+1) as published.
    std::vector<nat> down{1};
    for (nat k = n + 1; k >= 2; --k)
      down.push_back(k);
    CHECK(to_cycles(add_commutator(1, n)) == Cycles(n + 1, {down}));
    std::vector<nat> up(n + 1);
    std::iota(up.begin(), up.end(), nat{1});
    CHECK(to_cycles(add_commutator(n, 1)) == Cycles(n + 1, {up}));
  }
}

TEST_CASE("multiplicative commutator closed forms") {
  CHECK(mult_commutator(1, 7) == identity(7));
  CHECK(mult_commutator(7, 1) == identity(7));
  CHECK(mult_commutator(3, 2).table() == std::vector<nat>{1, 3, 5, 2, 4, 6});
  CHECK(print_cycles(mult_commutator(2, 2)) == "(2,3)_4");

  for (nat n = 1; n <= 10; ++n) {
    const Perm c = mult_commutator(n, 2);
    for (nat k = 1; k <= 2 * n; ++k)
      CHECK(c(k) == (k <= n ? 2 * k - 1 : 2 * (k - n)));
    const Perm c2 = mult_commutator(2, n);
    for (nat k = 1; k <= 2 * n; ++k)
      CHECK(c2(k) == (k % 2 == 0 ? n + k / 2 : (k + 1) / 2));
  }
}

TEST_CASE("right distributor reproduces the published cycle decompositions") {
  CHECK(print_cycles(right_distributor(1, 1, 2)) == "(2,3)_4");
  CHECK(print_cycles(right_distributor(1, 1, 3)) == "(2,3,5,4)_6");
  CHECK(print_cycles(right_distributor(1, 1, 4)) == "(2,3,5)_8(4,7,6)_8");
  CHECK(print_cycles(right_distributor(1, 1, 5)) == "(2,3,5,9,8,6)_10(4,7)_10");

  for (nat n = 0; n <= 6; ++n) {
    CHECK(right_distributor(n, 1, 1) == identity(n + 1));
    CHECK(right_distributor(1, n, 1) == identity(n + 1));
    CHECK(right_distributor(n, 3, 0) == identity(0));
    CHECK(right_distributor(0, n, 2) == identity(2 * n));
    CHECK(right_distributor(n, 0, 2) == identity(2 * n));
  }
}

TEST_CASE("left distributor is the identity") {
  CHECK(left_distributor(2, 3, 4) == identity(14));
  CHECK(left_distributor(0, 1, 1) == identity(0));
  CHECK(left_distributor(1, 1, 1) == identity(2));
  for (nat m = 0; m <= 5; ++m)
    for (nat n = 0; n <= 5; ++n)
      for (nat p = 0; p <= 5; ++p)
        CHECK(oracle_left_dist(m, n, p) == identity(m * (n + p)));
}

TEST_CASE("injections and their composition identities") {
  auto [i1, i2] = injections(2, 3);
  CHECK(i1.table() == std::vector<nat>{1, 2});
  CHECK(i1.cod() == 5);
  CHECK(i2.table() == std::vector<nat>{3, 4, 5});

  for (nat m = 0; m <= 4; ++m)
    for (nat n = 0; n <= 4; ++n)
      for (nat p = 0; p <= 4; ++p) {
        auto [a1, a2] = injections(m, n);
        auto [b1, b2] = injections(m + n, p);
        auto [c1, c2] = injections(m, n + p);
        CHECK(compose(b1, a1) == c1);
        CHECK(sum_map(a2, identity(p).as_map()) == c2);
      }
  auto [z1, z2] = injections(0, 3);
  CHECK(z2.is_identity());
  auto [w1, w2] = injections(3, 0);
  CHECK(w1.is_identity());
}

TEST_CASE("projections and their composition identities") {
  auto [p1, p2] = projections(4, 1);
  CHECK(p1.is_identity());
  CHECK(p2.table() == std::vector<nat>{1, 1, 1, 1});
  auto [q1, q2] = projections(1, 4);
  CHECK(q2.is_identity());

  try {
    projections(0, 3);
    FAIL("expected InvalidProjection");
  } catch (const error &e) {
    CHECK(e.code() == errc::invalid_projection);
  }

  for (nat m = 1; m <= 4; ++m)
    for (nat n = 1; n <= 4; ++n)
      for (nat p = 1; p <= 4; ++p) {
        auto [a1, a2] = projections(m, n);
        auto [b1, b2] = projections(m * n, p);
        auto [c1, c2] = projections(m, n * p);
        CHECK(compose(a1, b1) == c1);
        CHECK(prod_map(a2, identity(p).as_map()) == c2);
      }
}

TEST_CASE("pair indexing bijections") {
  const SumIndexing add{2, 3};
  CHECK(add.to_flat(2, SumIndexing::Side::second) == 4);
  for (nat v = 1; v <= 5; ++v) {
    auto [k, side] = add.from_flat(v);
    CHECK(add.to_flat(k, side) == v);
  }
  CHECK_THROWS_AS(add.to_flat(3, SumIndexing::Side::first), error);
  CHECK_THROWS_AS(add.from_flat(6), error);

  const ProdIndexing mul{3, 2};
  CHECK(mul.to_flat(2, 2) == 5);
  CHECK(mul.from_flat(6) == std::pair<nat, nat>{3, 2});
  for (nat k = 1; k <= 6; ++k) {
    auto [i, j] = mul.from_flat(k);
    CHECK(mul.to_flat(i, j) == k);
  }
  CHECK_THROWS_AS(mul.from_flat(7), error);
  CHECK_THROWS_AS((ProdIndexing{0, 2}).from_flat(1), error);
}

TEST_CASE("modified remainder") {
  CHECK(mod_remainder(3, 6) == 3);
  CHECK(mod_remainder(3, 7) == 1);
  CHECK(mod_remainder(1, 5) == 1);
  CHECK(mod_remainder(4, 0) == 4);
  try {
    mod_remainder(0, 5);
    FAIL("expected ZeroModulus");
  } catch (const error &e) {
    CHECK(e.code() == errc::zero_modulus);
  }
}

TEST_CASE("sigma factors rebuild the distributor") {
  CHECK(print_cycles(sigma_factor(2, 2)) == "(2,3)_4");
  CHECK(distributor_via_sigma(2) == right_distributor(1, 1, 2));
  CHECK(print_cycles(distributor_via_sigma(5)) == "(2,3,5,9,8,6)_10(4,7)_10");
  CHECK(distributor_via_sigma(1) == identity(2));
  CHECK(distributor_via_sigma(0) == identity(0));
  for (nat p = 2; p <= 10; ++p)
    CHECK(distributor_via_sigma(p) == right_distributor(1, 1, p));
  CHECK_THROWS_AS(sigma_factor(1, 3), error);
  CHECK_THROWS_AS(sigma_factor(4, 3), error);
}

TEST_CASE("closed forms agree with the universal-property oracles") {
  for (nat m = 0; m <= 5; ++m)
    for (nat n = 0; n <= 5; ++n) {
      CHECK(oracle_add_comm(m, n) == add_commutator(m, n));
      CHECK(oracle_mult_comm(m, n) == mult_commutator(m, n));
      for (nat p = 0; p <= 5; ++p)
        CHECK(oracle_right_dist(m, n, p) == right_distributor(m, n, p));
    }

  for (nat m = 0; m <= 3; ++m)
    for (nat mc = 0; mc <= 3; ++mc)
      for (nat n = 0; n <= 3; ++n)
        for (nat nc = 0; nc <= 3; ++nc)
          for (const FinMap &f : all_maps(m, mc))
            for (const FinMap &g : all_maps(n, nc)) {
              CHECK(oracle_sum(f, g) == sum_map(f, g));
              CHECK(oracle_prod(f, g) == prod_map(f, g));
            }

  Rng rng(101);
  for (int k = 0; k < 1000; ++k) {
    const nat m = rng.below(7), mc = 1 + rng.below(6);
    const nat n = rng.below(7), nc = 1 + rng.below(6);
    const FinMap f = random_map(rng, m, mc);
    const FinMap g = random_map(rng, n, nc);
    CHECK(oracle_sum(f, g) == sum_map(f, g));
    CHECK(oracle_prod(f, g) == prod_map(f, g));
  }
}

TEST_CASE("bifunctoriality of sum and product") {
  for (nat m = 0; m <= 3; ++m)
    for (nat mc = 0; mc <= 3; ++mc)
      for (nat n = 0; n <= 3; ++n)
        for (nat nc = 0; nc <= 3; ++nc)
          for (const FinMap &f : all_maps(m, mc))
            for (const FinMap &g : all_maps(n, nc)) {
              // Compose with a second sampled layer.
              Rng rng(nat(m * 64 + mc * 16 + n * 4 + nc));
              const FinMap f2 = random_map(rng, mc, 1 + rng.below(3));
              const FinMap g2 = random_map(rng, nc, 1 + rng.below(3));
              CHECK(sum_map(compose(f2, f), compose(g2, g)) ==
                    compose(sum_map(f2, g2), sum_map(f, g)));
              CHECK(prod_map(compose(f2, f), compose(g2, g)) ==
                    compose(prod_map(f2, g2), prod_map(f, g)));
            }

  Rng rng(2024);
  for (int k = 0; k < 1000; ++k) {
    const nat m = rng.below(7), mc = 1 + rng.below(6), md = 1 + rng.below(6);
    const nat n = rng.below(7), nc = 1 + rng.below(6), nd = 1 + rng.below(6);
    const FinMap f = random_map(rng, m, mc), f2 = random_map(rng, mc, md);
    const FinMap g = random_map(rng, n, nc), g2 = random_map(rng, nc, nd);
    CHECK(sum_map(compose(f2, f), compose(g2, g)) ==
          compose(sum_map(f2, g2), sum_map(f, g)));
    CHECK(prod_map(compose(f2, f), compose(g2, g)) ==
          compose(prod_map(f2, g2), prod_map(f, g)));
  }
}

TEST_CASE("strict monoid structure on sums and products") {
  Rng rng(7);
  for (int k = 0; k < 200; ++k) {
    const FinMap f = random_map(rng, rng.below(5), 1 + rng.below(4));
    const FinMap g = random_map(rng, rng.below(5), 1 + rng.below(4));
    const FinMap h = random_map(rng, rng.below(5), 1 + rng.below(4));
    const FinMap empty(0, {});
    const FinMap unit(1, {1});
    CHECK(sum_map(sum_map(f, g), h) == sum_map(f, sum_map(g, h)));
    CHECK(prod_map(prod_map(f, g), h) == prod_map(f, prod_map(g, h)));
    CHECK(sum_map(empty, f) == f);
    CHECK(sum_map(f, empty) == f);
    CHECK(prod_map(unit, f) == f);
    CHECK(prod_map(f, unit) == f);
  }
}

TEST_CASE("commutator symmetry and naturality") {
  for (nat m = 0; m <= 4; ++m)
    for (nat n = 0; n <= 4; ++n) {
      CHECK(compose(add_commutator(n, m), add_commutator(m, n)) ==
            identity(m + n));
      CHECK(compose(mult_commutator(n, m), mult_commutator(m, n)) ==
            identity(m * n));
    }

  Rng rng(31);
  for (int k = 0; k < 500; ++k) {
    const nat m = rng.below(5), mc = 1 + rng.below(4);
    const nat n = rng.below(5), nc = 1 + rng.below(4);
    const FinMap f = random_map(rng, m, mc);
    const FinMap g = random_map(rng, n, nc);
    CHECK(compose(add_commutator(mc, nc).as_map(), sum_map(f, g)) ==
          compose(sum_map(g, f), add_commutator(m, n).as_map()));
    CHECK(compose(mult_commutator(mc, nc).as_map(), prod_map(f, g)) ==
          compose(prod_map(g, f), mult_commutator(m, n).as_map()));
  }
}

TEST_CASE("right distributor naturality in all three slots") {
  for (nat m = 0; m <= 3; ++m)
    for (nat n = 0; n <= 3; ++n)
      for (nat p = 0; p <= 3; ++p)
        for (const Perm &f : all_perms(m))
          for (const Perm &g : all_perms(n)) {
            Rng rng(nat(m * 16 + n * 4 + p));
            const Perm h = random_perm(rng, p);
            // Oriented toward the merged block: d . ((f.h)+(g.h)) ==
            // ((f+g).h) . d.
            CHECK(compose(right_distributor(m, n, p),
                          sum_map(prod_map(f, h), prod_map(g, h))) ==
                  compose(prod_map(sum_map(f, g), h),
                          right_distributor(m, n, p)));
          }
}

TEST_CASE("hexagon identities with trivial associators") {
  for (nat m = 0; m <= 4; ++m)
    for (nat n = 0; n <= 4; ++n)
      for (nat p = 0; p <= 4; ++p) {
        CHECK(add_commutator(m, n + p) ==
              compose(sum_map(identity(n), add_commutator(m, p)),
                      sum_map(add_commutator(m, n), identity(p))));
        CHECK(mult_commutator(m, n * p) ==
              compose(prod_map(identity(n), mult_commutator(m, p)),
                      prod_map(mult_commutator(m, n), identity(p))));
      }
}

TEST_CASE("distributor interacts with the multiplicative commutator") {
  // c'(m+n,p) . dist == c'(m,p) + c'(n,p), the compatibility square with
  // the trivial left distributor.
  for (nat m = 0; m <= 5; ++m)
    for (nat n = 0; n <= 5; ++n)
      for (nat p = 0; p <= 5; ++p)
        CHECK(sum_map(mult_commutator(m, p), mult_commutator(n, p)) ==
              compose(mult_commutator(m + n, p), right_distributor(m, n, p)));
}

TEST_CASE("product with the two-point swap is the doubled commutator") {
  const Perm swap2 = adjacent_transposition(1, 2);
  for (nat m = 0; m <= 6; ++m)
    CHECK(prod_map(identity(m), swap2) == add_commutator(m, m));
}
