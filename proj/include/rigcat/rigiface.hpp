#ifndef RIGCAT_RIGIFACE_HPP
#define RIGCAT_RIGIFACE_HPP

#include <concepts>
#include <optional>
#include <string>
#include <vector>

#include "rigcat/matrix.hpp"
#include "rigcat/rng.hpp"
#include "rigcat/skelrig.hpp"

namespace rigcat {

/// Behavioral contract of a computationally presented left-semistrict rig
/// category: objects and morphisms with decidable equality, strict unit
/// objects 0 and 1, sums and products, the additive braiding c, and the
/// right distributor d' : (x+y)z -> xz+yz. Everything else (associators,
/// unitors, left distributor, absorbers) is required to be an identity,
/// which in these representations means the object arithmetic is strict.
template <class I>
concept Instance = requires(const I &s, const typename I::Object &a,
                            const typename I::Morphism &f, nat bound) {
  { s.name() } -> std::convertible_to<std::string>;
  { s.zero() } -> std::same_as<typename I::Object>;
  { s.one() } -> std::same_as<typename I::Object>;
  { s.add(a, a) } -> std::same_as<typename I::Object>;
  { s.mul(a, a) } -> std::same_as<typename I::Object>;
  { s.object_eq(a, a) } -> std::same_as<bool>;
  { s.object_str(a) } -> std::convertible_to<std::string>;
  { s.dom(f) } -> std::same_as<typename I::Object>;
  { s.cod(f) } -> std::same_as<typename I::Object>;
  { s.id(a) } -> std::same_as<typename I::Morphism>;
  { s.compose(f, f) } -> std::same_as<typename I::Morphism>;
  { s.invert(f) } -> std::same_as<typename I::Morphism>;
  { s.sum(f, f) } -> std::same_as<typename I::Morphism>;
  { s.prod(f, f) } -> std::same_as<typename I::Morphism>;
  { s.braiding(a, a) } -> std::same_as<typename I::Morphism>;
  { s.dist_right(a, a, a) } -> std::same_as<typename I::Morphism>;
  { s.equal(f, f) } -> std::same_as<bool>;
  { s.describe(f) } -> std::convertible_to<std::string>;
  { s.objects_up_to(bound) } -> std::same_as<std::vector<typename I::Object>>;
};

template <class I>
concept HasMultBraiding = requires(const I &s, const typename I::Object &a) {
  { s.mult_braiding(a, a) } -> std::same_as<typename I::Morphism>;
};

template <class I>
concept HasAutEnumeration = requires(const I &s, const typename I::Object &a) {
  { s.automorphisms(a) } -> std::same_as<std::vector<typename I::Morphism>>;
};

template <class I>
concept HasMorphismSampling =
    requires(const I &s, Rng &rng, const typename I::Object &a) {
      { s.sample(rng, a, a) } -> std::same_as<typename I::Morphism>;
    };

/// Structural families that can be deliberately corrupted for mutation
/// testing of the checker.
enum class Mutation { none, braiding_id, dist_right_id, sum_twist, prod_twist };

/// The skeletal groupoid of finite sets: objects are sizes, morphisms are
/// permutations, sums and products act blockwise / gridwise.
class FSetInstance {
public:
  using Object = nat;
  using Morphism = Perm;

  FSetInstance() = default;
  explicit FSetInstance(Mutation mutation) : mutation_(mutation) {}

  std::string name() const;
  Mutation mutation() const { return mutation_; }

  Object zero() const { return 0; }
  Object one() const { return 1; }
  Object add(Object a, Object b) const { return checked_add(a, b); }
  Object mul(Object a, Object b) const { return checked_mul(a, b); }
  bool object_eq(Object a, Object b) const { return a == b; }
  std::string object_str(Object a) const { return std::to_string(a); }

  Object dom(const Morphism &f) const { return f.degree(); }
  Object cod(const Morphism &f) const { return f.degree(); }
  Morphism id(Object a) const { return identity(a); }
  Morphism compose(const Morphism &g, const Morphism &f) const {
    return rigcat::compose(g, f);
  }
  Morphism invert(const Morphism &f) const { return rigcat::invert(f); }
  Morphism sum(const Morphism &f, const Morphism &g) const {
    return twist(sum_map(f, g), mutation_ == Mutation::sum_twist);
  }
  Morphism prod(const Morphism &f, const Morphism &g) const {
    return twist(prod_map(f, g), mutation_ == Mutation::prod_twist);
  }
  Morphism braiding(Object a, Object b) const {
    if (mutation_ == Mutation::braiding_id)
      return identity(a + b);
    return add_commutator(a, b);
  }
  Morphism dist_right(Object a, Object b, Object c) const {
    if (mutation_ == Mutation::dist_right_id)
      return identity((a + b) * c);
    return right_distributor_inv(a, b, c);
  }
  Morphism mult_braiding(Object a, Object b) const {
    return mult_commutator(a, b);
  }
  bool equal(const Morphism &f, const Morphism &g) const { return f == g; }
  std::string describe(const Morphism &f) const { return print_cycles(f); }

  std::vector<Object> objects_up_to(nat bound) const;
  std::vector<Morphism> automorphisms(Object a) const;
  Morphism sample(Rng &rng, Object domain, Object codomain) const;
  Morphism random_automorphism(Rng &rng, Object a) const {
    return random_perm(rng, a);
  }

private:
  static Morphism twist(Perm p, bool apply);

  Mutation mutation_ = Mutation::none;
};

/// Exact-arithmetic matrices: objects are dimensions, morphisms n -> m are
/// m x n rational matrices, the sum is block diagonal, the product the
/// scaled block pattern. Structural isomorphisms are images of the
/// finite-set permutations.
class MatInstance {
public:
  using Object = nat;
  using Morphism = RatMatrix;

  std::string name() const { return "mat"; }

  Object zero() const { return 0; }
  Object one() const { return 1; }
  Object add(Object a, Object b) const { return checked_add(a, b); }
  Object mul(Object a, Object b) const { return checked_mul(a, b); }
  bool object_eq(Object a, Object b) const { return a == b; }
  std::string object_str(Object a) const { return std::to_string(a); }

  Object dom(const Morphism &f) const { return f.cols(); }
  Object cod(const Morphism &f) const { return f.rows(); }
  Morphism id(Object a) const { return RatMatrix::identity(a); }
  Morphism compose(const Morphism &g, const Morphism &f) const {
    return mat_mul(g, f);
  }
  Morphism invert(const Morphism &f) const { return mat_inverse(f); }
  Morphism sum(const Morphism &f, const Morphism &g) const {
    return mat_sum(f, g);
  }
  Morphism prod(const Morphism &f, const Morphism &g) const {
    return mat_prod(f, g);
  }
  Morphism braiding(Object a, Object b) const {
    return perm_matrix(add_commutator(a, b));
  }
  Morphism dist_right(Object a, Object b, Object c) const {
    return perm_matrix(right_distributor_inv(a, b, c));
  }
  bool equal(const Morphism &f, const Morphism &g) const { return f == g; }
  std::string describe(const Morphism &f) const { return rigcat::describe(f); }

  std::vector<Object> objects_up_to(nat bound) const;
  Morphism sample(Rng &rng, Object domain, Object codomain) const {
    return random_matrix(rng, codomain, domain);
  }
  Morphism random_automorphism(Rng &rng, Object a) const {
    return random_invertible_matrix(rng, a);
  }
};

/// The n-fold sum of the unit object.
template <Instance I>
typename I::Object nfold(const I &s, nat n) {
  typename I::Object acc = s.zero();
  for (nat k = 0; k < n; ++k)
    acc = s.add(acc, s.one());
  return acc;
}

/// The canonical (a+b)+(c+d) -> (a+c)+(b+d) rearrangement id + c + id.
template <Instance I>
typename I::Morphism interchange(const I &s, typename I::Object a,
                                 typename I::Object b, typename I::Object c,
                                 typename I::Object d) {
  return s.sum(s.id(a), s.sum(s.braiding(b, c), s.id(d)));
}

/// d'_{x,y,n} unrolled into id + c + id factors; agrees with the native
/// right distributor whenever the third argument is a sum of units.
template <Instance I>
typename I::Morphism dist_right_recursive(const I &s, typename I::Object x,
                                          typename I::Object y, nat n) {
  const typename I::Object xy = s.add(x, y);
  typename I::Morphism acc = s.id(s.mul(xy, nfold(s, n)));
  for (nat k = 1; k + 1 <= n; ++k) {
    const typename I::Object tail =
        s.add(s.mul(x, nfold(s, n - 1 - k)), s.mul(y, nfold(s, n - k)));
    const typename I::Morphism factor =
        s.sum(s.id(s.mul(x, nfold(s, k))),
              s.sum(s.braiding(s.mul(y, nfold(s, k)), x), s.id(tail)));
    acc = s.compose(factor, acc);
  }
  return acc;
}

/// Per-axiom aggregate produced by the verification suites.
struct AxiomReport {
  enum class Verdict { pass, fail, vacuous };

  struct Witness {
    std::vector<std::string> objects;
    std::string left;
    std::string right;
  };

  std::string axiom;
  std::string instance;
  std::uint64_t cases = 0;
  Verdict verdict = Verdict::pass;
  std::optional<Witness> witness;

  bool failed() const { return verdict == Verdict::fail; }
};

const char *verdict_name(AxiomReport::Verdict v);

} // namespace rigcat

#endif
