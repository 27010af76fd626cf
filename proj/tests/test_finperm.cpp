#include "doctest.h"

#include <algorithm>
#include <numeric>

#include "rigcat/finperm.hpp"
#include "rigcat/rng.hpp"

using namespace rigcat;

namespace {

Perm perm(std::vector<nat> table) { return Perm(std::move(table)); }

std::vector<Perm> all_perms(nat n) {
  std::vector<nat> table(n);
  std::iota(table.begin(), table.end(), nat{1});
  std::vector<Perm> out;
  do {
    out.push_back(Perm(table));
  } while (std::next_permutation(table.begin(), table.end()));
  return out;
}

// Table-inversion oracle, independent of invert().
Perm brute_invert(const Perm &p) {
  std::vector<nat> table(p.degree());
  for (nat i = 1; i <= p.degree(); ++i)
    for (nat j = 1; j <= p.degree(); ++j)
      if (p(j) == i)
        table[i - 1] = j;
  return Perm(std::move(table));
}

} // namespace

TEST_CASE("identity permutations") {
  CHECK(identity(0).degree() == 0);
  CHECK(identity(1).table() == std::vector<nat>{1});
  CHECK(identity(3).table() == std::vector<nat>{1, 2, 3});
  CHECK(identity(3).is_identity());
}

TEST_CASE("composition applies the right factor first") {
  CHECK(compose(identity(3), identity(3)) == identity(3));

  const Perm swap2 = perm({2, 1});
  CHECK(compose(swap2, swap2) == identity(2));

  // g(f(i)) tabulated by hand for g = (2,3), f = (1,2) in degree 3.
  const Perm g = perm({1, 3, 2});
  const Perm f = perm({2, 1, 3});
  CHECK(compose(g, f) == perm({3, 1, 2}));
  CHECK(print_cycles(compose(g, f)) == "(1,3,2)_3");
}

TEST_CASE("composition requires matching endpoints") {
  const FinMap f(2, {1, 2, 1});
  const FinMap g(3, {3, 1});
  CHECK_THROWS_WITH_AS(compose(f, f), doctest::Contains("DomainMismatch"),
                       error);
  CHECK(compose(g, f).table() == std::vector<nat>{3, 1, 3});
  try {
    compose(f, g);
    FAIL("expected DomainMismatch");
  } catch (const error &e) {
    CHECK(e.code() == errc::domain_mismatch);
  }
}

TEST_CASE("inversion") {
  CHECK(invert(identity(4)) == identity(4));
  const Perm t = perm({2, 1, 3});
  CHECK(invert(t) == t);
  const Perm cycle = from_cycles(Cycles(3, {{1, 2, 3}}));
  CHECK(invert(cycle) == from_cycles(Cycles(3, {{1, 3, 2}})));
  for (const Perm &p : all_perms(5)) {
    CHECK(invert(p) == brute_invert(p));
    CHECK(compose(invert(p), p) == identity(5));
    CHECK(compose(p, invert(p)) == identity(5));
  }
}

TEST_CASE("associativity of composition on sampled maps") {
  Rng rng(11);
  for (int k = 0; k < 200; ++k) {
    const nat n = 1 + rng.below(7);
    const Perm a = random_perm(rng, n), b = random_perm(rng, n),
               c = random_perm(rng, n);
    CHECK(compose(a, compose(b, c)) == compose(compose(a, b), c));
  }
}

TEST_CASE("cycle decomposition round-trips") {
  CHECK(to_cycles(identity(5)).cycles().empty());
  CHECK(to_cycles(identity(5)).degree() == 5);

  for (const Perm &p : all_perms(5))
    CHECK(from_cycles(to_cycles(p)) == p);

  Rng rng(23);
  for (nat n = 6; n <= 8; ++n)
    for (int k = 0; k < 100; ++k) {
      const Perm p = random_perm(rng, n);
      CHECK(from_cycles(to_cycles(p)) == p);
    }
}

TEST_CASE("cycle constructor rejects malformed data") {
  CHECK_THROWS_AS(Cycles(3, {{1, 2}, {2, 3}}), error); // repeated point
  CHECK_THROWS_AS(Cycles(3, {{1, 4}}), error);         // out of range
  CHECK_THROWS_AS(Cycles(3, {{2}}), error);            // too short
}

TEST_CASE("cycle text format") {
  CHECK(print_cycles(identity(3)) == "()_3");
  CHECK(print_cycles(perm({2, 1, 3, 4})) == "(1,2)_4");

  const Cycles parsed = parse_cycles("(2,3)_4");
  CHECK(parsed.degree() == 4);
  REQUIRE(parsed.cycles().size() == 1);
  CHECK(parsed.cycles()[0] == std::vector<nat>{2, 3});

  CHECK(from_cycles(parse_cycles("()_3")) == identity(3));
  CHECK(parse_cycles(" ( 2 , 3 ) _ 4 ") == parse_cycles("(2,3)_4"));
  CHECK(parse_cycles("(2,3)(4,7,6)_8") == parse_cycles("(2,3)_8(4,7,6)_8"));
  CHECK(parse_cycles("(3,2)_4") == parse_cycles("(2,3)_4"));

  try {
    parse_cycles("(1,2)(1,3)_3");
    FAIL("expected ParseError");
  } catch (const error &e) {
    CHECK(e.code() == errc::parse_error);
    CHECK(std::string(e.what()).find("offset") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_cycles("(1,2"), error);
  CHECK_THROWS_AS(parse_cycles("(1,2)"), error);  // missing degree
  CHECK_THROWS_AS(parse_cycles("(1,2)_3(1,2)_4"), error);

  // print . parse is the identity on canonical text.
  Rng rng(5);
  for (int k = 0; k < 100; ++k) {
    const Perm p = random_perm(rng, 1 + rng.below(9));
    const std::string text = print_cycles(p);
    CHECK(print_cycles(parse_cycles(text)) == text);
  }
}

TEST_CASE("adjacent transpositions") {
  CHECK(adjacent_transposition(1, 2) == perm({2, 1}));
  CHECK(print_cycles(adjacent_transposition(3, 5)) == "(3,4)_5");
  try {
    adjacent_transposition(5, 5);
    FAIL("expected IndexOutOfRange");
  } catch (const error &e) {
    CHECK(e.code() == errc::index_out_of_range);
  }
}

TEST_CASE("adjacent decomposition recomposes exhaustively") {
  CHECK(decompose_adjacent(identity(4)).empty());
  CHECK(decompose_adjacent(perm({2, 1})) == std::vector<nat>{1});

  const Perm far = from_cycles(Cycles(3, {{1, 3}}));
  CHECK(compose_adjacent(decompose_adjacent(far), 3) == far);

  for (nat n = 0; n <= 6; ++n)
    for (const Perm &p : all_perms(n)) {
      const auto seq = decompose_adjacent(p);
      CHECK(seq.size() <= n * (n - 1) / 2);
      CHECK(compose_adjacent(seq, n) == p);
    }
}

TEST_CASE("permutation order") {
  CHECK(order(identity(7)) == 1);
  CHECK(order(from_cycles(Cycles(5, {{1, 2}, {3, 4, 5}}))) == 6);
  CHECK(order(from_cycles(Cycles(4, {{1, 2, 3, 4}}))) == 4);
}

TEST_CASE("finmap invariants") {
  CHECK_THROWS_AS(FinMap(2, {3}), error);
  CHECK_THROWS_AS(FinMap(0, {1}), error);
  CHECK(FinMap(4, {}).dom() == 0);
  CHECK(FinMap(3, {2, 2}).is_bijective() == false);
  CHECK_THROWS_AS(Perm({1, 1}), error);
  CHECK_THROWS_AS(Perm({2, 3}), error);
}
