#include "rigcat/skelrig.hpp"

#include <numeric>

namespace rigcat {

FinMap sum_map(const FinMap &f, const FinMap &g) {
  std::vector<nat> table;
  table.reserve(f.dom() + g.dom());
  for (nat k = 1; k <= f.dom(); ++k)
    table.push_back(f(k));
  for (nat k = 1; k <= g.dom(); ++k)
    table.push_back(f.cod() + g(k));
  return FinMap(checked_add(f.cod(), g.cod()), std::move(table));
}

Perm sum_map(const Perm &f, const Perm &g) {
  FinMap m = sum_map(f.as_map(), g.as_map());
  return Perm::unchecked(m.table());
}

FinMap prod_map(const FinMap &f, const FinMap &g) {
  const nat m = f.dom(), mp = f.cod();
  const nat dom = checked_mul(m, g.dom());
  const nat cod = checked_mul(mp, g.cod());
  std::vector<nat> table;
  table.reserve(dom);
  for (nat k = 1; k <= dom; ++k) {
    const nat q = k / m, r = k % m;
    if (r == 0)
      table.push_back((g(q) - 1) * mp + f(m));
    else
      table.push_back((g(q + 1) - 1) * mp + f(r));
  }
  return FinMap(cod, std::move(table));
}

Perm prod_map(const Perm &f, const Perm &g) {
  FinMap m = prod_map(f.as_map(), g.as_map());
  return Perm::unchecked(m.table());
}

Perm add_commutator(nat m, nat n) {
  std::vector<nat> table;
  table.reserve(checked_add(m, n));
  for (nat k = 1; k <= m; ++k)
    table.push_back(n + k);
  for (nat k = m + 1; k <= m + n; ++k)
    table.push_back(k - m);
  return Perm(std::move(table));
}

Perm mult_commutator(nat m, nat n) {
  const nat degree = checked_mul(m, n);
  std::vector<nat> table;
  table.reserve(degree);
  for (nat k = 1; k <= degree; ++k) {
    const nat q = k / m, r = k % m;
    if (r == 0)
      table.push_back((m - 1) * n + q);
    else
      table.push_back((r - 1) * n + q + 1);
  }
  return Perm(std::move(table));
}

Perm right_distributor(nat m, nat n, nat p) {
  const nat degree = checked_mul(checked_add(m, n), p);
  std::vector<nat> table;
  table.reserve(degree);
  const nat first = m * p;
  for (nat s = 1; s <= first; ++s)
    table.push_back(s + (s - mod_remainder(m, s)) / m * n);
  for (nat s = first + 1; s <= degree; ++s) {
    const nat t = s - first;
    table.push_back(t + (t + n - mod_remainder(n, t)) / n * m);
  }
  return Perm(std::move(table));
}

Perm right_distributor_inv(nat m, nat n, nat p) {
  return invert(right_distributor(m, n, p));
}

Perm left_distributor(nat m, nat n, nat p) {
  return identity(checked_mul(m, checked_add(n, p)));
}

std::pair<FinMap, FinMap> injections(nat m, nat n) {
  std::vector<nat> first(m), second(n);
  std::iota(first.begin(), first.end(), nat{1});
  std::iota(second.begin(), second.end(), m + 1);
  const nat total = checked_add(m, n);
  return {FinMap(total, std::move(first)), FinMap(total, std::move(second))};
}

std::pair<FinMap, FinMap> projections(nat m, nat n) {
  if (m == 0 || n == 0)
    fail(errc::invalid_projection, "projections need m, n >= 1; got " +
                                       std::to_string(m) + ", " +
                                       std::to_string(n));
  const nat degree = checked_mul(m, n);
  std::vector<nat> pi1, pi2;
  pi1.reserve(degree);
  pi2.reserve(degree);
  for (nat k = 1; k <= degree; ++k) {
    const nat q = k / m, r = k % m;
    pi1.push_back(r == 0 ? m : r);
    pi2.push_back(r == 0 ? q : q + 1);
  }
  return {FinMap(m, std::move(pi1)), FinMap(n, std::move(pi2))};
}

nat mod_remainder(nat k, nat x) {
  if (k == 0)
    fail(errc::zero_modulus, "modified remainder needs k >= 1");
  const nat r = x % k;
  return r == 0 ? k : r;
}

nat SumIndexing::to_flat(nat k, Side side) const {
  if (side == Side::first) {
    if (k < 1 || k > m)
      fail(errc::range_error, "left point out of range");
    return k;
  }
  if (k < 1 || k > n)
    fail(errc::range_error, "right point out of range");
  return m + k;
}

std::pair<nat, SumIndexing::Side> SumIndexing::from_flat(nat v) const {
  if (v >= 1 && v <= m)
    return {v, Side::first};
  if (v > m && v <= m + n)
    return {v - m, Side::second};
  fail(errc::range_error, "flat point out of range");
}

nat ProdIndexing::to_flat(nat i, nat j) const {
  if (i < 1 || i > m || j < 1 || j > n)
    fail(errc::range_error, "pair out of range");
  return (j - 1) * m + i;
}

std::pair<nat, nat> ProdIndexing::from_flat(nat k) const {
  if (m == 0 || n == 0 || k < 1 || k > m * n)
    fail(errc::range_error, "flat point out of range");
  const nat q = k / m, r = k % m;
  if (r == 0)
    return {m, q};
  return {r, q + 1};
}

Perm sigma_factor(nat i, nat p) {
  if (i < 2 || i > p)
    fail(errc::index_out_of_range, "sigma factor needs 2 <= i <= p");
  std::vector<nat> table(2 * p);
  std::iota(table.begin(), table.end(), nat{1});
  for (nat t = 0; t <= p - i; ++t)
    std::swap(table[i + 2 * t - 1], table[i + 2 * t]);
  return Perm(std::move(table));
}

Perm distributor_via_sigma(nat p) {
  Perm acc = identity(2 * p);
  if (p < 2)
    return acc;
  for (nat i = p; i >= 2; --i)
    acc = compose(sigma_factor(i, p), acc);
  return acc;
}

FinMap oracle_sum(const FinMap &f, const FinMap &g) {
  const SumIndexing dom{f.dom(), g.dom()};
  const SumIndexing cod{f.cod(), g.cod()};
  std::vector<nat> table;
  table.reserve(f.dom() + g.dom());
  for (nat k = 1; k <= f.dom() + g.dom(); ++k) {
    auto [v, side] = dom.from_flat(k);
    if (side == SumIndexing::Side::first)
      table.push_back(cod.to_flat(f(v), SumIndexing::Side::first));
    else
      table.push_back(cod.to_flat(g(v), SumIndexing::Side::second));
  }
  return FinMap(checked_add(f.cod(), g.cod()), std::move(table));
}

FinMap oracle_prod(const FinMap &f, const FinMap &g) {
  const nat dom = checked_mul(f.dom(), g.dom());
  const nat cod = checked_mul(f.cod(), g.cod());
  const ProdIndexing di{f.dom(), g.dom()};
  const ProdIndexing ci{f.cod(), g.cod()};
  std::vector<nat> table;
  table.reserve(dom);
  for (nat k = 1; k <= dom; ++k) {
    auto [i, j] = di.from_flat(k);
    table.push_back(ci.to_flat(f(i), g(j)));
  }
  return FinMap(cod, std::move(table));
}

Perm oracle_add_comm(nat m, nat n) {
  const SumIndexing from{m, n};
  const SumIndexing to{n, m};
  std::vector<nat> table;
  table.reserve(m + n);
  for (nat k = 1; k <= m + n; ++k) {
    auto [v, side] = from.from_flat(k);
    table.push_back(to.to_flat(v, side == SumIndexing::Side::first
                                      ? SumIndexing::Side::second
                                      : SumIndexing::Side::first));
  }
  return Perm(std::move(table));
}

Perm oracle_mult_comm(nat m, nat n) {
  const ProdIndexing from{m, n};
  const ProdIndexing to{n, m};
  std::vector<nat> table;
  table.reserve(checked_mul(m, n));
  for (nat k = 1; k <= m * n; ++k) {
    auto [i, j] = from.from_flat(k);
    table.push_back(to.to_flat(j, i));
  }
  return Perm(std::move(table));
}

Perm oracle_right_dist(nat m, nat n, nat p) {
  const ProdIndexing left{m, p};
  const ProdIndexing right{n, p};
  const ProdIndexing target{m + n, p};
  std::vector<nat> table;
  table.reserve(checked_mul(checked_add(m, n), p));
  for (nat s = 1; s <= m * p; ++s) {
    auto [i, j] = left.from_flat(s);
    table.push_back(target.to_flat(i, j));
  }
  for (nat s = 1; s <= n * p; ++s) {
    auto [i, j] = right.from_flat(s);
    table.push_back(target.to_flat(m + i, j));
  }
  return Perm(std::move(table));
}

Perm oracle_left_dist(nat m, nat n, nat p) {
  const ProdIndexing first{m, n};
  const ProdIndexing second{m, p};
  const ProdIndexing target{m, n + p};
  std::vector<nat> table;
  table.reserve(checked_mul(m, checked_add(n, p)));
  for (nat s = 1; s <= m * n; ++s) {
    auto [i, j] = first.from_flat(s);
    table.push_back(target.to_flat(i, j));
  }
  for (nat s = 1; s <= m * p; ++s) {
    auto [i, j] = second.from_flat(s);
    table.push_back(target.to_flat(i, n + j));
  }
  return Perm(std::move(table));
}

} // namespace rigcat
