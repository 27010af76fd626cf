#ifndef RIGCAT_CANHOM_HPP
#define RIGCAT_CANHOM_HPP

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "rigcat/laplaza.hpp"
#include "rigcat/rigiface.hpp"

namespace rigcat {

template <class I>
concept HasAutSampling =
    requires(const I &s, Rng &rng, const typename I::Object &a) {
      { s.random_automorphism(rng, a) } -> std::same_as<typename I::Morphism>;
    };

/// Image of the adjacent transposition (i,i+1) of [n] under the canonical
/// functor: id + c(1,1) + id with i-1 and n-i-1 units on the flanks.
template <Instance I>
typename I::Morphism fcan_generator(const I &s, nat i, nat n) {
  if (n < 2 || i < 1 || i + 1 > n)
    fail(errc::index_out_of_range,
         "generator (" + std::to_string(i) + "," + std::to_string(i + 1) +
             ") does not exist in degree " + std::to_string(n));
  return s.sum(s.id(nfold(s, i - 1)),
               s.sum(s.braiding(s.one(), s.one()), s.id(nfold(s, n - i - 1))));
}

/// The canonical functor with generator images cached per degree. Build it
/// once, then read from any number of threads.
template <Instance I>
class CanonicalFunctor {
public:
  using M = typename I::Morphism;

  CanonicalFunctor(const I &s, nat max_degree) : s_(&s) {
    gens_.resize(max_degree + 1);
    for (nat n = 2; n <= max_degree; ++n) {
      gens_[n].reserve(n - 1);
      for (nat i = 1; i + 1 <= n; ++i)
        gens_[n].push_back(fcan_generator(s, i, n));
    }
  }

  const I &instance() const { return *s_; }
  nat max_degree() const { return gens_.size() - 1; }

  const M &generator(nat i, nat n) const { return gens_.at(n).at(i - 1); }

  M image(const Perm &p) const {
    const nat n = p.degree();
    if (n >= gens_.size())
      fail(errc::index_out_of_range,
           "degree " + std::to_string(n) + " beyond cached bound");
    M acc = s_->id(nfold(*s_, n));
    for (nat i : decompose_adjacent(p))
      acc = s_->compose(acc, gens_[n][i - 1]);
    return acc;
  }

private:
  const I *s_;
  std::vector<std::vector<M>> gens_;
};

/// One-shot canonical image of a permutation.
template <Instance I>
typename I::Morphism fcan_perm(const I &s, const Perm &p) {
  typename I::Morphism acc = s.id(nfold(s, p.degree()));
  for (nat i : decompose_adjacent(p))
    acc = s.compose(acc, fcan_generator(s, i, p.degree()));
  return acc;
}

namespace detail {

/// Serial first-failure accumulator for the hom-level suites.
template <Instance I>
class FamilyCheck {
public:
  FamilyCheck(const I &s, std::string axiom) : s_(&s) {
    report_.axiom = std::move(axiom);
    report_.instance = s.name();
  }

  void require(bool ok, const std::vector<std::string> &objects,
               const typename I::Morphism &lhs,
               const typename I::Morphism &rhs) {
    ++report_.cases;
    if (ok || report_.witness)
      return;
    report_.verdict = AxiomReport::Verdict::fail;
    report_.witness = AxiomReport::Witness{objects, s_->describe(lhs),
                                           s_->describe(rhs)};
  }

  void check(const typename I::Morphism &lhs, const typename I::Morphism &rhs,
             std::vector<std::string> objects) {
    require(s_->equal(lhs, rhs), objects, lhs, rhs);
  }

  AxiomReport take() { return std::move(report_); }

private:
  const I *s_;
  AxiomReport report_;
};

inline std::vector<std::string> tags(std::initializer_list<nat> values) {
  std::vector<std::string> out;
  for (nat v : values)
    out.push_back(std::to_string(v));
  return out;
}

inline std::vector<Perm> generators_of(nat n) {
  std::vector<Perm> out;
  for (nat i = 1; i + 1 <= n; ++i)
    out.push_back(adjacent_transposition(i, n));
  if (out.empty())
    out.push_back(identity(n));
  return out;
}

} // namespace detail

/// Verifies the symmetric-group presentation relations on the generator
/// images: squares, braid triples, and distant commutation.
template <Instance I>
std::vector<AxiomReport> check_generator_relations(const I &s, nat n) {
  using M = typename I::Morphism;
  const CanonicalFunctor<I> can(s, n);
  const M unit = s.id(nfold(s, n));

  detail::FamilyCheck<I> r1(s, "R1"), r2(s, "R2"), r3(s, "R3");
  for (nat i = 1; i + 1 <= n; ++i) {
    const M &g = can.generator(i, n);
    r1.check(s.compose(g, g), unit, detail::tags({i, n}));
  }
  for (nat i = 1; i + 2 <= n; ++i) {
    const M gh = s.compose(can.generator(i, n), can.generator(i + 1, n));
    r2.check(s.compose(gh, s.compose(gh, gh)), unit, detail::tags({i, n}));
  }
  for (nat i = 1; i + 1 <= n; ++i)
    for (nat j = i + 2; j + 1 <= n; ++j) {
      const M gh = s.compose(can.generator(i, n), can.generator(j, n));
      r3.check(s.compose(gh, gh), unit, detail::tags({i, j, n}));
    }
  return {r1.take(), r2.take(), r3.take()};
}

/// Strict preservation checks: sums and products of morphisms, the additive
/// braiding, and the right distributor, plus the product-with-swap identity
/// that drives the distributor proof.
template <Instance I>
std::vector<AxiomReport> fcan_preserves_structure(const I &s, nat bound,
                                                  std::uint64_t seed = 0,
                                                  nat samples = 25) {
  using M = typename I::Morphism;
  // Sums reach degree 2*bound, products bound^2, distributors 2*bound^2.
  const nat max_degree =
      checked_mul(checked_add(bound, bound), std::max(bound, nat{1}));
  const CanonicalFunctor<I> can(s, max_degree);

  const nat exhaustive_limit = 3;
  auto perms_of = [&](nat n, Rng &rng) {
    std::vector<Perm> out;
    if (n <= exhaustive_limit) {
      std::vector<nat> table(n);
      for (nat i = 0; i < n; ++i)
        table[i] = i + 1;
      do {
        out.push_back(Perm::unchecked(table));
      } while (std::next_permutation(table.begin(), table.end()));
    } else {
      out.push_back(identity(n));
      for (nat k = 0; k < samples; ++k)
        out.push_back(random_perm(rng, n));
    }
    return out;
  };

  detail::FamilyCheck<I> sum_check(s, "SH1-sum"), prod_check(s, "SH1-prod");
  Rng rng(seed);
  for (nat m = 0; m <= bound; ++m)
    for (nat n = 0; n <= bound; ++n) {
      Rng local = rng.fork("SH1#" + std::to_string(m) + "," +
                           std::to_string(n));
      for (const Perm &a : perms_of(m, local))
        for (const Perm &b : perms_of(n, local)) {
          sum_check.check(can.image(sum_map(a, b)),
                          s.sum(can.image(a), can.image(b)),
                          detail::tags({m, n}));
          prod_check.check(can.image(prod_map(a, b)),
                           s.prod(can.image(a), can.image(b)),
                           detail::tags({m, n}));
        }
    }

  detail::FamilyCheck<I> comm_check(s, "SH2-braiding");
  for (nat m = 0; m <= bound; ++m)
    for (nat n = 0; n <= bound; ++n)
      comm_check.check(can.image(add_commutator(m, n)),
                       s.braiding(nfold(s, m), nfold(s, n)),
                       detail::tags({m, n}));

  detail::FamilyCheck<I> dist_check(s, "SH3-distributor");
  detail::FamilyCheck<I> dist_rec(s, "SH3-recursive");
  for (nat m = 0; m <= bound; ++m)
    for (nat n = 0; n <= bound; ++n)
      for (nat p = 0; p <= bound; ++p) {
        const M native = s.dist_right(nfold(s, m), nfold(s, n), nfold(s, p));
        dist_check.check(can.image(right_distributor_inv(m, n, p)), native,
                         detail::tags({m, n, p}));
        dist_rec.check(dist_right_recursive(s, nfold(s, m), nfold(s, n), p),
                       native, detail::tags({m, n, p}));
      }

  detail::FamilyCheck<I> swap_check(s, "SH-prodswap");
  const Perm two_swap = adjacent_transposition(1, 2);
  for (nat m = 0; m <= bound; ++m) {
    swap_check.check(s.prod(s.id(nfold(s, m)), s.braiding(s.one(), s.one())),
                     s.braiding(nfold(s, m), nfold(s, m)), detail::tags({m}));
    swap_check.check(can.image(prod_map(identity(m), two_swap)),
                     s.braiding(nfold(s, m), nfold(s, m)), detail::tags({m}));
  }

  return {sum_check.take(), prod_check.take(), comm_check.take(),
          dist_check.take(), dist_rec.take(), swap_check.take()};
}

/// A homomorphism out of the skeleton presented by its object table and
/// basic maps. The monoidality tables are frozen at construction so that
/// later corruption of tau is observable.
template <Instance I>
struct Hom {
  using O = typename I::Object;
  using M = typename I::Morphism;

  const I *instance = nullptr;
  std::vector<O> objects;
  std::vector<M> tau;
  std::vector<std::vector<std::optional<M>>> phi_plus_tab;
  std::vector<std::vector<std::optional<M>>> phi_bullet_tab;
  std::vector<std::vector<M>> gen_images;

  nat bound() const { return tau.size() - 1; }
  const M &eps_plus() const { return tau[0]; }
  const M &eps_bullet() const { return tau[1]; }

  const M &phi_plus(nat m, nat n) const {
    if (m >= phi_plus_tab.size() || n >= phi_plus_tab[m].size() ||
        !phi_plus_tab[m][n])
      fail(errc::index_out_of_range, "phi+ index beyond materialized bound");
    return *phi_plus_tab[m][n];
  }

  const M &phi_bullet(nat m, nat n) const {
    if (m >= phi_bullet_tab.size() || n >= phi_bullet_tab[m].size() ||
        !phi_bullet_tab[m][n])
      fail(errc::index_out_of_range, "phi. index beyond materialized bound");
    return *phi_bullet_tab[m][n];
  }

  /// Canonical image of a source permutation (cached generators).
  M fcan(const Perm &p) const {
    const nat n = p.degree();
    if (n > bound())
      fail(errc::index_out_of_range, "degree beyond materialized bound");
    M acc = instance->id(nfold(*instance, n));
    for (nat i : decompose_adjacent(p))
      acc = instance->compose(acc, gen_images[n][i - 1]);
    return acc;
  }

  /// Action on morphisms: conjugation of the canonical image by tau.
  M act(const Perm &p) const {
    const nat n = p.degree();
    if (n > bound())
      fail(errc::index_out_of_range, "degree beyond materialized bound");
    return instance->compose(instance->invert(tau[n]),
                             instance->compose(fcan(p), tau[n]));
  }
};

template <Instance I>
Hom<I> build_hom(const I &s, std::vector<typename I::Object> objects,
                 std::vector<typename I::Morphism> tau) {
  using M = typename I::Morphism;
  if (tau.size() < 2)
    fail(errc::index_out_of_range, "hom needs at least indices 0 and 1");
  if (objects.size() != tau.size())
    fail(errc::endpoint_mismatch, "object table and tau length differ");
  const nat bound = tau.size() - 1;
  for (nat n = 0; n <= bound; ++n) {
    if (!s.object_eq(s.dom(tau[n]), objects[n]) ||
        !s.object_eq(s.cod(tau[n]), nfold(s, n)))
      fail(errc::endpoint_mismatch,
           "tau_" + std::to_string(n) + " has endpoints " +
               s.object_str(s.dom(tau[n])) + " -> " +
               s.object_str(s.cod(tau[n])));
    s.invert(tau[n]); // NonInvertibleData if singular
  }

  Hom<I> hom;
  hom.instance = &s;
  hom.objects = std::move(objects);
  hom.tau = std::move(tau);

  hom.gen_images.resize(bound + 1);
  for (nat n = 2; n <= bound; ++n)
    for (nat i = 1; i + 1 <= n; ++i)
      hom.gen_images[n].push_back(fcan_generator(s, i, n));

  hom.phi_plus_tab.assign(bound + 1,
                          std::vector<std::optional<M>>(bound + 1));
  hom.phi_bullet_tab.assign(bound + 1,
                            std::vector<std::optional<M>>(bound + 1));
  for (nat m = 0; m <= bound; ++m)
    for (nat n = 0; n <= bound; ++n) {
      if (m + n <= bound)
        hom.phi_plus_tab[m][n] =
            s.compose(s.invert(s.sum(hom.tau[m], hom.tau[n])),
                      hom.tau[m + n]);
      if (m * n <= bound)
        hom.phi_bullet_tab[m][n] =
            s.compose(s.invert(s.prod(hom.tau[m], hom.tau[n])),
                      hom.tau[m * n]);
    }
  return hom;
}

template <Instance I>
Hom<I> canonical_hom(const I &s, nat bound) {
  std::vector<typename I::Object> objects;
  std::vector<typename I::Morphism> tau;
  for (nat n = 0; n <= bound; ++n) {
    objects.push_back(nfold(s, n));
    tau.push_back(s.id(objects.back()));
  }
  return build_hom(s, std::move(objects), std::move(tau));
}

template <Instance I>
  requires HasAutSampling<I>
Hom<I> random_hom(const I &s, nat bound, Rng &rng) {
  std::vector<typename I::Object> objects;
  std::vector<typename I::Morphism> tau;
  for (nat n = 0; n <= bound; ++n) {
    objects.push_back(nfold(s, n));
    tau.push_back(s.random_automorphism(rng, objects.back()));
  }
  return build_hom(s, std::move(objects), std::move(tau));
}

/// Fresh evaluation of the monoidality composites from the live tau values.
template <Instance I>
std::pair<typename I::Morphism, typename I::Morphism>
monoidality_from_tau(const Hom<I> &hom, nat m, nat n) {
  const I &s = *hom.instance;
  if (m + n > hom.bound() || m * n > hom.bound() || m > hom.bound() ||
      n > hom.bound())
    fail(errc::index_out_of_range, "indices beyond materialized bound");
  auto plus = s.compose(s.invert(s.sum(hom.tau[m], hom.tau[n])),
                        hom.tau[m + n]);
  auto bullet = s.compose(s.invert(s.prod(hom.tau[m], hom.tau[n])),
                          hom.tau[m * n]);
  return {std::move(plus), std::move(bullet)};
}

template <Instance I>
struct BasicMaps {
  std::vector<typename I::Morphism> tau;
  bool mirrored_agree = true;
};

/// Rebuilds the basic maps from monoidal data via the unit recurrence, and
/// cross-computes the mirrored recurrence.
template <Instance I, class PhiPlus>
BasicMaps<I> basic_maps_from_data(const I &s, const PhiPlus &phi_plus,
                                  const typename I::Morphism &eps_plus,
                                  const typename I::Morphism &eps_bullet,
                                  nat bound) {
  using M = typename I::Morphism;
  s.invert(eps_plus);
  s.invert(eps_bullet);
  BasicMaps<I> out;
  out.tau.push_back(eps_plus);
  std::vector<M> mirrored{eps_plus};
  for (nat n = 0; n + 1 <= bound; ++n) {
    out.tau.push_back(
        s.compose(s.sum(eps_bullet, out.tau[n]), phi_plus(1, n)));
    s.invert(out.tau.back()); // NonInvertibleData on degenerate input
    mirrored.push_back(
        s.compose(s.sum(mirrored[n], eps_bullet), phi_plus(n, 1)));
    if (!s.equal(out.tau[n + 1], mirrored[n + 1]))
      out.mirrored_agree = false;
  }
  return out;
}

/// The closed-form product for a single basic map.
template <Instance I, class PhiPlus>
typename I::Morphism closed_form_basic_map(const I &s, const PhiPlus &phi_plus,
                                           const typename I::Object &x_one,
                                           const typename I::Morphism &eps_plus,
                                           const typename I::Morphism &eps_bullet,
                                           nat n) {
  using M = typename I::Morphism;
  using O = typename I::Object;
  if (n == 0)
    return eps_plus;
  if (n == 1)
    return eps_bullet;
  auto xfold = [&](nat k) {
    O acc = s.zero();
    for (nat i = 0; i < k; ++i)
      acc = s.add(acc, x_one);
    return acc;
  };
  M acc = phi_plus(1, n - 1);
  for (nat j = n - 2; j >= 1; --j)
    acc = s.compose(s.sum(s.id(xfold(n - 1 - j)), phi_plus(1, j)), acc);
  M eps_sum = eps_bullet;
  for (nat i = 1; i < n; ++i)
    eps_sum = s.sum(eps_sum, eps_bullet);
  return s.compose(eps_sum, acc);
}

struct HomCheckOptions {
  std::uint64_t seed = 0;
  /// Random permutations per degree in the RT1 naturality squares.
  nat naturality_samples = 100;
  /// Random permutations mixed into the generator sweeps of A1/A5.
  nat functor_samples = 3;
};

/// The nine coherence families a presented homomorphism must satisfy.
template <Instance I>
std::vector<AxiomReport> verify_hom_axioms(const Hom<I> &hom,
                                           const HomCheckOptions &opt = {}) {
  using M = typename I::Morphism;
  const I &s = *hom.instance;
  const nat B = hom.bound();

  auto perms_for = [&](nat n, const std::string &label) {
    std::vector<Perm> out = detail::generators_of(n);
    Rng rng = Rng(opt.seed).fork(label + "#" + std::to_string(n));
    for (nat k = 0; k < opt.functor_samples && n > 1; ++k)
      out.push_back(random_perm(rng, n));
    return out;
  };

  detail::FamilyCheck<I> a1(s, "A1");
  for (nat m = 0; m <= B; ++m)
    for (nat n = 0; m + n <= B; ++n)
      for (const Perm &rho : perms_for(m, "A1L"))
        for (const Perm &sigma : perms_for(n, "A1R")) {
          M lhs = s.compose(hom.phi_plus(m, n), hom.act(sum_map(rho, sigma)));
          M rhs = s.compose(s.sum(hom.act(rho), hom.act(sigma)),
                            hom.phi_plus(m, n));
          a1.check(lhs, rhs, detail::tags({m, n}));
        }

  detail::FamilyCheck<I> a2(s, "A2");
  for (nat m = 0; m <= B; ++m)
    for (nat n = 0; m + n <= B; ++n)
      for (nat p = 0; m + n + p <= B; ++p) {
        M lhs = s.compose(s.sum(hom.phi_plus(m, n), s.id(hom.objects[p])),
                          hom.phi_plus(m + n, p));
        M rhs = s.compose(s.sum(s.id(hom.objects[m]), hom.phi_plus(n, p)),
                          hom.phi_plus(m, n + p));
        a2.check(lhs, rhs, detail::tags({m, n, p}));
      }

  detail::FamilyCheck<I> a3(s, "A3");
  for (nat m = 0; m <= B; ++m)
    for (nat n = 0; m + n <= B; ++n) {
      M lhs = s.compose(s.braiding(hom.objects[m], hom.objects[n]),
                        hom.phi_plus(m, n));
      M rhs = s.compose(hom.phi_plus(n, m), hom.act(add_commutator(m, n)));
      a3.check(lhs, rhs, detail::tags({m, n}));
    }

  detail::FamilyCheck<I> a4(s, "A4");
  for (nat n = 0; n <= B; ++n) {
    M left = s.compose(s.sum(hom.eps_plus(), s.id(hom.objects[n])),
                       hom.phi_plus(0, n));
    M right = s.compose(s.sum(s.id(hom.objects[n]), hom.eps_plus()),
                        hom.phi_plus(n, 0));
    a4.check(left, s.id(hom.objects[n]), detail::tags({0, n}));
    a4.check(right, s.id(hom.objects[n]), detail::tags({n, 0}));
  }

  detail::FamilyCheck<I> a5(s, "A5");
  for (nat m = 0; m <= B; ++m)
    for (nat n = 0; n <= B; ++n) {
      if (m * n > B)
        continue;
      for (const Perm &rho : perms_for(m, "A5L"))
        for (const Perm &sigma : perms_for(n, "A5R")) {
          M lhs =
              s.compose(hom.phi_bullet(m, n), hom.act(prod_map(rho, sigma)));
          M rhs = s.compose(s.prod(hom.act(rho), hom.act(sigma)),
                            hom.phi_bullet(m, n));
          a5.check(lhs, rhs, detail::tags({m, n}));
        }
    }

  detail::FamilyCheck<I> a6(s, "A6");
  for (nat m = 0; m <= B; ++m)
    for (nat n = 0; n <= B; ++n)
      for (nat p = 0; p <= B; ++p) {
        if (m * n > B || n * p > B || m * n * p > B)
          continue;
        M lhs = s.compose(s.prod(hom.phi_bullet(m, n), s.id(hom.objects[p])),
                          hom.phi_bullet(m * n, p));
        M rhs = s.compose(s.prod(s.id(hom.objects[m]), hom.phi_bullet(n, p)),
                          hom.phi_bullet(m, n * p));
        a6.check(lhs, rhs, detail::tags({m, n, p}));
      }

  detail::FamilyCheck<I> a7(s, "A7");
  for (nat n = 0; n <= B; ++n) {
    M left = s.compose(s.prod(hom.eps_bullet(), s.id(hom.objects[n])),
                       hom.phi_bullet(1, n));
    M right = s.compose(s.prod(s.id(hom.objects[n]), hom.eps_bullet()),
                        hom.phi_bullet(n, 1));
    a7.check(left, s.id(hom.objects[n]), detail::tags({1, n}));
    a7.check(right, s.id(hom.objects[n]), detail::tags({n, 1}));
  }

  detail::FamilyCheck<I> a8(s, "A8");
  for (nat m = 0; m <= B; ++m)
    for (nat n = 0; n <= B; ++n)
      for (nat p = 0; p <= B; ++p) {
        if (n + p > B || m * n > B || m * p > B || m * (n + p) > B)
          continue;
        M lhs = s.compose(s.sum(hom.phi_bullet(m, n), hom.phi_bullet(m, p)),
                          hom.phi_plus(m * n, m * p));
        M rhs = s.compose(s.prod(s.id(hom.objects[m]), hom.phi_plus(n, p)),
                          hom.phi_bullet(m, n + p));
        a8.check(lhs, rhs, detail::tags({m, n, p}));
      }

  detail::FamilyCheck<I> a9(s, "A9");
  for (nat m = 0; m <= B; ++m)
    for (nat n = 0; n <= B; ++n)
      for (nat p = 0; p <= B; ++p) {
        if (m + n > B || m * p > B || n * p > B || (m + n) * p > B)
          continue;
        M lhs = s.compose(
            s.sum(hom.phi_bullet(m, p), hom.phi_bullet(n, p)),
            s.compose(hom.phi_plus(m * p, n * p),
                      hom.act(right_distributor_inv(m, n, p))));
        M rhs = s.compose(
            s.dist_right(hom.objects[m], hom.objects[n], hom.objects[p]),
            s.compose(s.prod(hom.phi_plus(m, n), s.id(hom.objects[p])),
                      hom.phi_bullet(m + n, p)));
        a9.check(lhs, rhs, detail::tags({m, n, p}));
      }

  return {a1.take(), a2.take(), a3.take(), a4.take(), a5.take(),
          a6.take(), a7.take(), a8.take(), a9.take()};
}

/// A morphism family between two homomorphisms over the same instance.
template <Instance I>
struct Transformation {
  Hom<I> source;
  Hom<I> target;
  std::vector<typename I::Morphism> components;

  nat bound() const { return components.size() - 1; }
};

/// tau as an invertible transformation from hom to the canonical one.
template <Instance I>
Transformation<I> tau_transformation(const Hom<I> &hom) {
  Transformation<I> t;
  t.source = hom;
  t.target = canonical_hom(*hom.instance, hom.bound());
  t.components = hom.tau;
  return t;
}

/// The only transformation there is: componentwise (tau'_n)^-1 . tau_n.
template <Instance I>
Transformation<I> unique_iso(const Hom<I> &from, const Hom<I> &to) {
  if (from.instance != to.instance)
    fail(errc::target_mismatch, "homomorphisms target distinct instances");
  const I &s = *from.instance;
  const nat bound = std::min(from.bound(), to.bound());
  Transformation<I> t;
  t.source = from;
  t.target = to;
  for (nat n = 0; n <= bound; ++n)
    t.components.push_back(
        s.compose(s.invert(to.tau[n]), from.tau[n]));
  return t;
}

/// Naturality plus two-sided monoidality of a transformation.
template <Instance I>
std::vector<AxiomReport> verify_transformation(const Transformation<I> &t,
                                               const HomCheckOptions &opt = {}) {
  using M = typename I::Morphism;
  const I &s = *t.source.instance;
  const nat B = t.bound();

  detail::FamilyCheck<I> rt1(s, "RT1");
  for (nat n = 0; n <= B; ++n) {
    std::vector<Perm> perms = detail::generators_of(n);
    Rng rng = Rng(opt.seed).fork("RT1#" + std::to_string(n));
    for (nat k = 0; k < opt.naturality_samples && n > 1; ++k)
      perms.push_back(random_perm(rng, n));
    for (const Perm &sigma : perms) {
      M lhs = s.compose(t.target.act(sigma), t.components[n]);
      M rhs = s.compose(t.components[n], t.source.act(sigma));
      rt1.check(lhs, rhs, detail::tags({n}));
    }
  }

  detail::FamilyCheck<I> rt2(s, "RT2");
  rt2.check(t.source.eps_plus(),
            s.compose(t.target.eps_plus(), t.components[0]),
            detail::tags({0}));
  for (nat m = 0; m <= B; ++m)
    for (nat n = 0; m + n <= B; ++n) {
      M lhs = s.compose(t.target.phi_plus(m, n), t.components[m + n]);
      M rhs = s.compose(s.sum(t.components[m], t.components[n]),
                        t.source.phi_plus(m, n));
      rt2.check(lhs, rhs, detail::tags({m, n}));
    }

  detail::FamilyCheck<I> rt3(s, "RT3");
  rt3.check(t.source.eps_bullet(),
            s.compose(t.target.eps_bullet(), t.components[1]),
            detail::tags({1}));
  for (nat m = 0; m <= B; ++m)
    for (nat n = 0; n <= B; ++n) {
      if (m * n > B)
        continue;
      M lhs = s.compose(t.target.phi_bullet(m, n), t.components[m * n]);
      M rhs = s.compose(s.prod(t.components[m], t.components[n]),
                        t.source.phi_bullet(m, n));
      rt3.check(lhs, rhs, detail::tags({m, n}));
    }

  return {rt1.take(), rt2.take(), rt3.take()};
}

/// Data of the composite endofunctor (outer after inner) for homs landing
/// back in the skeleton: the composite monoidality is phi_outer composed
/// with the outer image of phi_inner, and the composite basic maps follow
/// from the unit recurrence.
inline Hom<FSetInstance> composite_hom(const Hom<FSetInstance> &outer,
                                       const Hom<FSetInstance> &inner) {
  if (outer.instance != inner.instance)
    fail(errc::target_mismatch, "homomorphisms target distinct instances");
  const FSetInstance &s = *outer.instance;
  const nat bound = std::min(outer.bound(), inner.bound());
  auto phi_comp = [&](nat m, nat n) {
    return s.compose(outer.phi_plus(m, n), outer.act(inner.phi_plus(m, n)));
  };
  std::vector<Perm> tau{outer.tau[0]};
  const Perm eps_bullet =
      s.compose(outer.tau[1], outer.act(inner.tau[1]));
  for (nat n = 0; n + 1 <= bound; ++n)
    tau.push_back(s.compose(s.sum(eps_bullet, tau[n]), phi_comp(1, n)));
  std::vector<nat> objects;
  for (nat n = 0; n <= bound; ++n)
    objects.push_back(n);
  return build_hom(s, std::move(objects), std::move(tau));
}

struct ProductGroupResult {
  std::vector<AxiomReport> reports;
  std::uint64_t homs = 0;

  bool all_passed() const {
    return !std::any_of(reports.begin(), reports.end(),
                        [](const AxiomReport &r) { return r.failed(); });
  }
};

/// The identity-on-objects homs over the skeleton form the direct product
/// of the symmetric groups: every basic-map family yields a valid hom, the
/// family count matches, and composition of the induced endofunctors is the
/// componentwise product.
inline ProductGroupResult product_group_check(const FSetInstance &s, nat bound,
                                              std::uint64_t seed = 0,
                                              nat action_samples = 25) {
  ProductGroupResult result;

  std::vector<std::vector<Perm>> auts(bound + 1);
  std::vector<std::uint64_t> radix(bound + 1);
  std::uint64_t total = 1;
  for (nat n = 0; n <= bound; ++n) {
    auts[n] = s.automorphisms(n);
    radix[n] = auts[n].size();
    total *= radix[n];
  }

  std::vector<Hom<FSetInstance>> homs;
  homs.reserve(total);
  for (std::uint64_t flat = 0; flat < total; ++flat) {
    std::vector<Perm> tau;
    std::vector<nat> objects;
    std::uint64_t rest = flat;
    for (nat n = 0; n <= bound; ++n) {
      tau.push_back(auts[n][rest % radix[n]]);
      objects.push_back(n);
      rest /= radix[n];
    }
    homs.push_back(build_hom(s, std::move(objects), std::move(tau)));
  }
  result.homs = homs.size();

  detail::FamilyCheck<FSetInstance> card(s, "GRP-CARD");
  card.require(homs.size() == total, {std::to_string(homs.size())},
               identity(0), identity(0));

  HomCheckOptions quick;
  quick.seed = seed;
  quick.naturality_samples = 5;
  quick.functor_samples = 2;
  detail::FamilyCheck<FSetInstance> valid(s, "GRP-VALID");
  for (const auto &hom : homs) {
    bool ok = true;
    for (const auto &report : verify_hom_axioms(hom, quick))
      ok = ok && !report.failed();
    valid.require(ok, {print_cycles(hom.tau[bound])}, hom.tau[bound],
                  hom.tau[bound]);
  }

  detail::FamilyCheck<FSetInstance> law(s, "GRP-LAW");
  for (std::uint64_t a = 0; a < total; ++a)
    for (std::uint64_t b = 0; b < total; ++b) {
      const Hom<FSetInstance> comp = composite_hom(homs[a], homs[b]);
      bool ok = true;
      for (nat n = 0; n <= bound && ok; ++n)
        ok = comp.tau[n] == compose(homs[b].tau[n], homs[a].tau[n]);
      law.require(ok, {std::to_string(a), std::to_string(b)},
                  comp.tau[bound], compose(homs[b].tau[bound],
                                           homs[a].tau[bound]));
    }

  const Hom<FSetInstance> unit = canonical_hom(s, bound);
  detail::FamilyCheck<FSetInstance> unit_check(s, "GRP-UNIT");
  detail::FamilyCheck<FSetInstance> inv_check(s, "GRP-INV");
  for (const auto &hom : homs) {
    const Hom<FSetInstance> left = composite_hom(unit, hom);
    const Hom<FSetInstance> right = composite_hom(hom, unit);
    bool ok = true;
    for (nat n = 0; n <= bound && ok; ++n)
      ok = left.tau[n] == hom.tau[n] && right.tau[n] == hom.tau[n];
    unit_check.require(ok, {print_cycles(hom.tau[bound])}, hom.tau[bound],
                       hom.tau[bound]);

    std::vector<Perm> inv_tau;
    std::vector<nat> objects;
    for (nat n = 0; n <= bound; ++n) {
      inv_tau.push_back(invert(hom.tau[n]));
      objects.push_back(n);
    }
    const Hom<FSetInstance> inverse =
        build_hom(s, std::move(objects), std::move(inv_tau));
    const Hom<FSetInstance> prod = composite_hom(hom, inverse);
    bool inv_ok = true;
    for (nat n = 0; n <= bound && inv_ok; ++n)
      inv_ok = prod.tau[n].is_identity();
    inv_check.require(inv_ok, {print_cycles(hom.tau[bound])},
                      prod.tau[bound], identity(bound));
  }

  detail::FamilyCheck<FSetInstance> act_check(s, "GRP-ACT");
  Rng rng(seed);
  Rng pick = rng.fork("GRP-ACT");
  for (nat k = 0; k < action_samples; ++k) {
    const auto &f = homs[pick.below(total)];
    const auto &g = homs[pick.below(total)];
    const Hom<FSetInstance> comp = composite_hom(f, g);
    const nat n = pick.below(bound + 1);
    const Perm sigma = random_perm(pick, n);
    act_check.check(comp.act(sigma), f.act(g.act(sigma)),
                    detail::tags({k, n}));
  }

  result.reports = {card.take(),      valid.take(), law.take(),
                    unit_check.take(), inv_check.take(), act_check.take()};
  return result;
}

enum class UniqueSearchMode { pruned, full, relaxed };

inline const char *search_mode_name(UniqueSearchMode mode) {
  switch (mode) {
  case UniqueSearchMode::pruned: return "pruned";
  case UniqueSearchMode::full: return "full";
  case UniqueSearchMode::relaxed: return "relaxed";
  }
  return "unknown";
}

template <Instance I>
struct UniqueSearchResult {
  AxiomReport report;
  std::uint64_t families = 0;
  std::uint64_t solutions = 0;
};

/// Searches the families (xi_n) of automorphisms of the unit sums for
/// solutions of the endomorphism constraints; the identity family must be
/// the only one. The pruned mode mirrors the forcing argument, the full
/// mode checks every family against every constraint, and the relaxed mode
/// drops the additive recurrence while keeping naturality and the
/// multiplicative constraints, recording the observed count.
template <Instance I>
  requires HasAutEnumeration<I>
UniqueSearchResult<I> unique_endomorphism_check(
    const I &s, nat bound, UniqueSearchMode mode = UniqueSearchMode::full,
    ExecPolicy policy = ExecPolicy::parallel) {
  using M = typename I::Morphism;

  UniqueSearchResult<I> result;
  result.report.axiom = std::string("UNIQUE-") + search_mode_name(mode);
  result.report.instance = s.name();

  // Canonical images of every source permutation per degree.
  CanonicalFunctor<I> can(s, bound);
  std::vector<std::vector<M>> images(bound + 1);
  for (nat n = 0; n <= bound; ++n) {
    std::vector<nat> table(n);
    for (nat i = 0; i < n; ++i)
      table[i] = i + 1;
    do {
      images[n].push_back(can.image(Perm::unchecked(table)));
    } while (std::next_permutation(table.begin(), table.end()));
  }

  if (mode == UniqueSearchMode::pruned) {
    // xi_0 and xi_1 are forced to identities, and the additive recurrence
    // xi_{n+1} = xi_n + xi_1 forces the rest; verify the forced family.
    std::vector<M> xi{s.id(s.zero()), s.id(s.one())};
    for (nat n = 1; n < bound; ++n)
      xi.push_back(s.sum(xi[n], xi[1]));
    bool ok = true;
    for (nat n = 0; n <= bound && ok; ++n) {
      for (const M &img : images[n])
        if (!s.equal(s.compose(img, xi[n]), s.compose(xi[n], img))) {
          ok = false;
          break;
        }
      for (nat m = 0; m <= n && ok; ++m)
        if (m * n <= bound && !s.equal(xi[m * n], s.prod(xi[m], xi[n])))
          ok = false;
    }
    result.families = bound + 1;
    result.solutions = ok ? 1 : 0;
    result.report.cases = result.families;
    result.report.verdict = ok ? AxiomReport::Verdict::pass
                               : AxiomReport::Verdict::fail;
    return result;
  }

  std::vector<std::vector<M>> auts(bound + 1);
  std::vector<std::uint64_t> radix(bound + 1);
  std::uint64_t total = 1;
  for (nat n = 0; n <= bound; ++n) {
    auts[n] = s.automorphisms(nfold(s, n));
    radix[n] = auts[n].size();
    total *= radix[n];
  }

  const bool keep_additive = (mode == UniqueSearchMode::full);
  std::uint64_t solutions = 0;
  detail::FailureSlot stray; // a non-identity solution, if any

  auto evaluate = [&](std::uint64_t flat) -> std::optional<std::vector<M>> {
    std::vector<M> xi;
    xi.reserve(bound + 1);
    std::uint64_t rest = flat;
    for (nat n = 0; n <= bound; ++n) {
      xi.push_back(auts[n][rest % radix[n]]);
      rest /= radix[n];
    }
    if (!s.equal(xi[0], s.id(s.zero())) || !s.equal(xi[1], s.id(s.one())))
      return std::nullopt;
    for (nat n = 0; n <= bound; ++n)
      for (const M &img : images[n])
        if (!s.equal(s.compose(img, xi[n]), s.compose(xi[n], img)))
          return std::nullopt;
    if (keep_additive)
      for (nat m = 0; m <= bound; ++m)
        for (nat n = 0; m + n <= bound; ++n)
          if (!s.equal(xi[m + n], s.sum(xi[m], xi[n])))
            return std::nullopt;
    for (nat m = 0; m <= bound; ++m)
      for (nat n = 0; n <= bound; ++n)
        if (m * n <= bound && !s.equal(xi[m * n], s.prod(xi[m], xi[n])))
          return std::nullopt;
    return xi;
  };

  auto is_identity_family = [&](const std::vector<M> &xi) {
    for (nat n = 0; n <= bound; ++n)
      if (!s.equal(xi[n], s.id(nfold(s, n))))
        return false;
    return true;
  };

  auto body = [&](std::uint64_t flat, detail::FailureSlot &slot,
                  std::uint64_t &local_solutions) {
    auto xi = evaluate(flat);
    if (!xi)
      return;
    ++local_solutions;
    if (!is_identity_family(*xi)) {
      AxiomReport::Witness w;
      for (nat n = 0; n <= bound; ++n)
        w.objects.push_back(std::to_string(n));
      w.left = s.describe((*xi)[2 <= bound ? 2 : 0]);
      w.right = "identity family expected";
      slot.offer(flat, 0, std::move(w));
    }
  };

#ifdef _OPENMP
  if (policy == ExecPolicy::parallel) {
#pragma omp parallel
    {
      detail::FailureSlot local;
      std::uint64_t local_solutions = 0;
#pragma omp for schedule(dynamic, 64) nowait
      for (long long i = 0; i < static_cast<long long>(total); ++i)
        body(static_cast<std::uint64_t>(i), local, local_solutions);
#pragma omp critical(rigcat_unique_merge)
      {
        stray.merge(local);
        solutions += local_solutions;
      }
    }
  } else
#else
  (void)policy;
#endif
  {
    for (std::uint64_t i = 0; i < total; ++i)
      body(i, stray, solutions);
  }

  result.families = total;
  result.solutions = solutions;
  result.report.cases = total;
  if (solutions == 1 && !stray.set) {
    result.report.verdict = AxiomReport::Verdict::pass;
  } else {
    result.report.verdict = AxiomReport::Verdict::fail;
    if (stray.set)
      result.report.witness = stray.witness;
    else
      result.report.witness = AxiomReport::Witness{
          {}, "solution count " + std::to_string(solutions), "1"};
  }
  return result;
}

} // namespace rigcat

#endif
