#ifndef RIGCAT_LAPLAZA_HPP
#define RIGCAT_LAPLAZA_HPP

#include <algorithm>
#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "rigcat/rigiface.hpp"

namespace rigcat {

enum class ExecPolicy { serial, parallel };

struct CheckOptions {
  nat bound = 4;
  std::uint64_t seed = 0;
  std::uint64_t samples = 200;
  ExecPolicy policy = ExecPolicy::parallel;
};

namespace detail {

/// Lexicographically first failure over a (outer, inner) index space;
/// mergeable so parallel sweeps stay deterministic.
struct FailureSlot {
  bool set = false;
  std::uint64_t outer = 0;
  std::uint64_t inner = 0;
  AxiomReport::Witness witness;

  void offer(std::uint64_t o, std::uint64_t i, AxiomReport::Witness w) {
    if (!set || o < outer || (o == outer && i < inner)) {
      set = true;
      outer = o;
      inner = i;
      witness = std::move(w);
    }
  }

  void merge(const FailureSlot &other) {
    if (other.set)
      offer(other.outer, other.inner, other.witness);
  }
};

/// Runs eval(outer, slot) for every outer index, accumulating the number of
/// checks performed and the first failure. eval must be pure up to its slot.
template <class Eval>
AxiomReport sweep(std::string axiom, std::string instance, bool vacuous,
                  std::uint64_t total, ExecPolicy policy, const Eval &eval) {
  FailureSlot winner;
  std::uint64_t cases = 0;
#ifdef _OPENMP
  if (policy == ExecPolicy::parallel) {
#pragma omp parallel
    {
      FailureSlot local;
      std::uint64_t local_cases = 0;
#pragma omp for schedule(dynamic) nowait
      for (long long i = 0; i < static_cast<long long>(total); ++i)
        local_cases += eval(static_cast<std::uint64_t>(i), local);
#pragma omp critical(rigcat_sweep_merge)
      {
        winner.merge(local);
        cases += local_cases;
      }
    }
  } else
#else
  (void)policy;
#endif
  {
    for (std::uint64_t i = 0; i < total; ++i)
      cases += eval(i, winner);
  }

  AxiomReport report;
  report.axiom = std::move(axiom);
  report.instance = std::move(instance);
  report.cases = cases;
  if (winner.set) {
    report.verdict = AxiomReport::Verdict::fail;
    report.witness = std::move(winner.witness);
  } else {
    report.verdict =
        vacuous ? AxiomReport::Verdict::vacuous : AxiomReport::Verdict::pass;
  }
  return report;
}

inline std::vector<std::size_t> decode_tuple(std::uint64_t flat, int arity,
                                             std::size_t base) {
  std::vector<std::size_t> digits(arity);
  for (int k = arity - 1; k >= 0; --k) {
    digits[k] = flat % base;
    flat /= base;
  }
  return digits;
}

inline std::uint64_t int_pow(std::uint64_t base, int exp) {
  std::uint64_t out = 1;
  for (int i = 0; i < exp; ++i)
    out *= base;
  return out;
}

} // namespace detail

/// One coherence diagram: both composite legs as a function of an object
/// tuple. Diagrams whose legs are built only from strictly-trivial data are
/// flagged vacuous; they are still evaluated once per tuple to confirm the
/// strictness they encode.
template <Instance I>
struct EquationAxiom {
  using Legs = std::function<std::pair<typename I::Morphism,
                                       typename I::Morphism>(
      const I &, const std::vector<typename I::Object> &)>;

  std::string id;
  int arity;
  bool vacuous;
  Legs legs;
};

template <Instance I>
std::vector<EquationAxiom<I>> laplaza_equations() {
  using O = typename I::Object;
  using M = typename I::Morphism;
  using Objs = std::vector<O>;
  std::vector<EquationAxiom<I>> axioms;
  auto put = [&](std::string id, int arity, bool vacuous, auto fn) {
    axioms.push_back(EquationAxiom<I>{std::move(id), arity, vacuous, fn});
  };

  put("A1.1L", 4, true, [](const I &s, const Objs &o) {
    return std::pair<M, M>(
        s.id(s.mul(o[0], s.add(o[1], s.add(o[2], o[3])))),
        s.id(s.mul(o[0], s.add(s.add(o[1], o[2]), o[3]))));
  });
  put("A1.1R", 4, false, [](const I &s, const Objs &o) {
    const O x = o[0], y = o[1], z = o[2], t = o[3];
    M lhs = s.compose(s.sum(s.dist_right(x, y, t), s.id(s.mul(z, t))),
                      s.dist_right(s.add(x, y), z, t));
    M rhs = s.compose(s.sum(s.id(s.mul(x, t)), s.dist_right(y, z, t)),
                      s.dist_right(x, s.add(y, z), t));
    return std::pair<M, M>(std::move(lhs), std::move(rhs));
  });
  put("A1.2L", 3, false, [](const I &s, const Objs &o) {
    const O x = o[0], y = o[1], z = o[2];
    return std::pair<M, M>(s.prod(s.id(x), s.braiding(y, z)),
                           s.braiding(s.mul(x, y), s.mul(x, z)));
  });
  put("A1.2R", 3, false, [](const I &s, const Objs &o) {
    const O y = o[0], z = o[1], x = o[2];
    M lhs = s.compose(s.braiding(s.mul(y, x), s.mul(z, x)),
                      s.dist_right(y, z, x));
    M rhs = s.compose(s.dist_right(z, y, x), s.prod(s.braiding(y, z), s.id(x)));
    return std::pair<M, M>(std::move(lhs), std::move(rhs));
  });
  put("A1.3L", 2, true, [](const I &s, const Objs &o) {
    return std::pair<M, M>(s.id(s.mul(o[0], s.add(s.zero(), o[1]))),
                           s.id(s.mul(o[0], o[1])));
  });
  put("A1.3R", 2, false, [](const I &s, const Objs &o) {
    return std::pair<M, M>(s.dist_right(s.zero(), o[0], o[1]),
                           s.id(s.mul(o[0], o[1])));
  });
  put("A1.4L", 2, true, [](const I &s, const Objs &o) {
    return std::pair<M, M>(s.id(s.mul(o[0], s.add(o[1], s.zero()))),
                           s.id(s.mul(o[0], o[1])));
  });
  put("A1.4R", 2, false, [](const I &s, const Objs &o) {
    return std::pair<M, M>(s.dist_right(o[0], s.zero(), o[1]),
                           s.id(s.mul(o[0], o[1])));
  });
  put("A2.1", 4, false, [](const I &s, const Objs &o) {
    const O x = o[0], z = o[1], t = o[2], y = o[3];
    return std::pair<M, M>(s.prod(s.id(x), s.dist_right(z, t, y)),
                           s.dist_right(s.mul(x, z), s.mul(x, t), y));
  });
  put("A2.2", 2, true, [](const I &s, const Objs &o) {
    return std::pair<M, M>(s.id(s.mul(o[0], s.mul(s.zero(), o[1]))),
                           s.id(s.zero()));
  });
  put("A3.1L", 4, true, [](const I &s, const Objs &o) {
    return std::pair<M, M>(
        s.id(s.mul(o[0], s.mul(o[1], s.add(o[2], o[3])))),
        s.id(s.mul(s.mul(o[0], o[1]), s.add(o[2], o[3]))));
  });
  put("A3.1R", 2, true, [](const I &s, const Objs &o) {
    return std::pair<M, M>(s.id(s.mul(o[0], s.mul(o[1], s.zero()))),
                           s.id(s.zero()));
  });
  put("A3.2L", 4, false, [](const I &s, const Objs &o) {
    const O t = o[0], z = o[1], y = o[2], x = o[3];
    M lhs = s.compose(s.dist_right(s.mul(t, y), s.mul(z, y), x),
                      s.prod(s.dist_right(t, z, y), s.id(x)));
    M rhs = s.dist_right(t, z, s.mul(y, x));
    return std::pair<M, M>(std::move(lhs), std::move(rhs));
  });
  put("A3.2R", 2, true, [](const I &s, const Objs &o) {
    return std::pair<M, M>(s.id(s.mul(s.zero(), s.mul(o[0], o[1]))),
                           s.id(s.zero()));
  });
  put("A4.1", 4, false, [](const I &s, const Objs &o) {
    const O x = o[0], y = o[1], z = o[2], t = o[3];
    M lhs = s.compose(interchange(s, s.mul(x, z), s.mul(x, t), s.mul(y, z),
                                  s.mul(y, t)),
                      s.dist_right(x, y, s.add(z, t)));
    M rhs = s.sum(s.dist_right(x, y, z), s.dist_right(x, y, t));
    return std::pair<M, M>(std::move(lhs), std::move(rhs));
  });
  put("A4.2L", 2, false, [](const I &s, const Objs &o) {
    return std::pair<M, M>(s.dist_right(o[0], o[1], s.zero()),
                           s.id(s.zero()));
  });
  put("A4.2R", 2, true, [](const I &s, const Objs &o) {
    return std::pair<M, M>(
        s.id(s.mul(s.zero(), s.add(o[0], o[1]))),
        s.id(s.add(s.mul(s.zero(), o[0]), s.mul(s.zero(), o[1]))));
  });
  put("A5.1L", 2, true, [](const I &s, const Objs &o) {
    return std::pair<M, M>(
        s.id(s.mul(s.one(), s.add(o[0], o[1]))),
        s.id(s.add(s.mul(s.one(), o[0]), s.mul(s.one(), o[1]))));
  });
  put("A5.1R", 2, false, [](const I &s, const Objs &o) {
    return std::pair<M, M>(s.dist_right(o[0], o[1], s.one()),
                           s.id(s.add(o[0], o[1])));
  });
  put("A5.2", 0, true, [](const I &s, const Objs &) {
    return std::pair<M, M>(s.id(s.mul(s.one(), s.zero())), s.id(s.zero()));
  });
  put("SC9", 0, true, [](const I &s, const Objs &) {
    return std::pair<M, M>(s.id(s.mul(s.zero(), s.zero())), s.id(s.zero()));
  });
  put("C-SYM", 2, false, [](const I &s, const Objs &o) {
    return std::pair<M, M>(
        s.compose(s.braiding(o[1], o[0]), s.braiding(o[0], o[1])),
        s.id(s.add(o[0], o[1])));
  });
  put("C-HEX", 3, false, [](const I &s, const Objs &o) {
    const O x = o[0], y = o[1], z = o[2];
    M rhs = s.compose(s.sum(s.id(y), s.braiding(x, z)),
                      s.sum(s.braiding(x, y), s.id(z)));
    return std::pair<M, M>(s.braiding(x, s.add(y, z)), std::move(rhs));
  });

  if constexpr (HasMultBraiding<I>) {
    put("CP-SYM", 2, false, [](const I &s, const Objs &o) {
      return std::pair<M, M>(
          s.compose(s.mult_braiding(o[1], o[0]), s.mult_braiding(o[0], o[1])),
          s.id(s.mul(o[0], o[1])));
    });
    put("CP-HEX", 3, false, [](const I &s, const Objs &o) {
      const O x = o[0], y = o[1], z = o[2];
      M rhs = s.compose(s.prod(s.id(y), s.mult_braiding(x, z)),
                        s.prod(s.mult_braiding(x, y), s.id(z)));
      return std::pair<M, M>(s.mult_braiding(x, s.mul(y, z)), std::move(rhs));
    });
    put("CSC2L", 3, false, [](const I &s, const Objs &o) {
      const O x = o[0], y = o[1], z = o[2];
      M lhs = s.compose(s.sum(s.mult_braiding(x, z), s.mult_braiding(y, z)),
                        s.dist_right(x, y, z));
      return std::pair<M, M>(std::move(lhs), s.mult_braiding(s.add(x, y), z));
    });
    put("CSC2R", 1, false, [](const I &s, const Objs &o) {
      return std::pair<M, M>(s.mult_braiding(o[0], s.zero()),
                             s.id(s.zero()));
    });
  }

  return axioms;
}

template <Instance I>
AxiomReport check_equation(const I &s, const EquationAxiom<I> &axiom,
                           const CheckOptions &opt) {
  const auto objects = s.objects_up_to(opt.bound);
  const std::uint64_t total = detail::int_pow(objects.size(), axiom.arity);
  auto eval = [&](std::uint64_t flat, detail::FailureSlot &slot) {
    const auto digits = detail::decode_tuple(flat, axiom.arity, objects.size());
    std::vector<typename I::Object> tuple;
    tuple.reserve(digits.size());
    for (auto d : digits)
      tuple.push_back(objects[d]);
    auto [lhs, rhs] = axiom.legs(s, tuple);
    if (!s.equal(lhs, rhs)) {
      AxiomReport::Witness w;
      for (const auto &obj : tuple)
        w.objects.push_back(s.object_str(obj));
      w.left = s.describe(lhs);
      w.right = s.describe(rhs);
      slot.offer(flat, 0, std::move(w));
    }
    return std::uint64_t{1};
  };
  return detail::sweep(axiom.id, s.name(), axiom.vacuous, total, opt.policy,
                       eval);
}

/// Naturality of the additive braiding, checked over every morphism pair
/// when hom-sets are enumerable and over seeded samples otherwise.
template <Instance I>
AxiomReport check_braiding_naturality(const I &s, const CheckOptions &opt) {
  using M = typename I::Morphism;
  if constexpr (HasAutEnumeration<I>) {
    const auto objects = s.objects_up_to(opt.bound);
    std::vector<std::vector<M>> auts;
    auts.reserve(objects.size());
    for (const auto &obj : objects)
      auts.push_back(s.automorphisms(obj));
    const std::uint64_t total = objects.size() * objects.size();
    auto eval = [&](std::uint64_t flat, detail::FailureSlot &slot) {
      const std::size_t m = flat / objects.size();
      const std::size_t n = flat % objects.size();
      const M braid = s.braiding(objects[m], objects[n]);
      std::uint64_t inner = 0;
      for (const M &f : auts[m])
        for (const M &g : auts[n]) {
          M lhs = s.compose(braid, s.sum(f, g));
          M rhs = s.compose(s.sum(g, f), braid);
          if (!s.equal(lhs, rhs))
            slot.offer(flat, inner,
                       AxiomReport::Witness{
                           {s.object_str(objects[m]), s.object_str(objects[n])},
                           s.describe(lhs),
                           s.describe(rhs)});
          ++inner;
        }
      return inner;
    };
    return detail::sweep("NAT-c", s.name(), false, total, opt.policy, eval);
  } else {
    static_assert(HasMorphismSampling<I>,
                  "instance needs enumeration or sampling for naturality");
    auto eval = [&](std::uint64_t k, detail::FailureSlot &slot) {
      Rng rng = Rng(opt.seed).fork("NAT-c#" + std::to_string(k));
      const nat m = rng.below(opt.bound + 1), m2 = rng.below(opt.bound + 1);
      const nat n = rng.below(opt.bound + 1), n2 = rng.below(opt.bound + 1);
      const M f = s.sample(rng, m, m2);
      const M g = s.sample(rng, n, n2);
      M lhs = s.compose(s.braiding(m2, n2), s.sum(f, g));
      M rhs = s.compose(s.sum(g, f), s.braiding(m, n));
      if (!s.equal(lhs, rhs))
        slot.offer(k, 0,
                   AxiomReport::Witness{{std::to_string(m), std::to_string(n),
                                         std::to_string(m2),
                                         std::to_string(n2)},
                                        s.describe(lhs), s.describe(rhs)});
      return std::uint64_t{1};
    };
    return detail::sweep("NAT-c", s.name(), false, opt.samples, opt.policy,
                         eval);
  }
}

/// Naturality of the right distributor in all three slots.
template <Instance I>
AxiomReport check_distributor_naturality(const I &s, const CheckOptions &opt) {
  using M = typename I::Morphism;
  if constexpr (HasAutEnumeration<I>) {
    const auto objects = s.objects_up_to(opt.bound);
    std::vector<std::vector<M>> auts;
    auts.reserve(objects.size());
    for (const auto &obj : objects)
      auts.push_back(s.automorphisms(obj));
    const std::uint64_t total =
        objects.size() * objects.size() * objects.size();
    auto eval = [&](std::uint64_t flat, detail::FailureSlot &slot) {
      const auto digits = detail::decode_tuple(flat, 3, objects.size());
      const auto m = digits[0], n = digits[1], p = digits[2];
      const M dist = s.dist_right(objects[m], objects[n], objects[p]);
      std::uint64_t inner = 0;
      for (const M &f : auts[m])
        for (const M &g : auts[n])
          for (const M &h : auts[p]) {
            M lhs = s.compose(dist, s.prod(s.sum(f, g), h));
            M rhs = s.compose(s.sum(s.prod(f, h), s.prod(g, h)), dist);
            if (!s.equal(lhs, rhs))
              slot.offer(flat, inner,
                         AxiomReport::Witness{{s.object_str(objects[m]),
                                               s.object_str(objects[n]),
                                               s.object_str(objects[p])},
                                              s.describe(lhs),
                                              s.describe(rhs)});
            ++inner;
          }
      return inner;
    };
    return detail::sweep("NAT-dist", s.name(), false, total, opt.policy, eval);
  } else {
    static_assert(HasMorphismSampling<I>,
                  "instance needs enumeration or sampling for naturality");
    auto eval = [&](std::uint64_t k, detail::FailureSlot &slot) {
      Rng rng = Rng(opt.seed).fork("NAT-dist#" + std::to_string(k));
      const nat m = rng.below(opt.bound + 1), m2 = rng.below(opt.bound + 1);
      const nat n = rng.below(opt.bound + 1), n2 = rng.below(opt.bound + 1);
      const nat p = rng.below(opt.bound + 1), p2 = rng.below(opt.bound + 1);
      const M f = s.sample(rng, m, m2);
      const M g = s.sample(rng, n, n2);
      const M h = s.sample(rng, p, p2);
      M lhs = s.compose(s.dist_right(m2, n2, p2), s.prod(s.sum(f, g), h));
      M rhs = s.compose(s.sum(s.prod(f, h), s.prod(g, h)),
                        s.dist_right(m, n, p));
      if (!s.equal(lhs, rhs))
        slot.offer(k, 0,
                   AxiomReport::Witness{{std::to_string(m), std::to_string(n),
                                         std::to_string(p)},
                                        s.describe(lhs), s.describe(rhs)});
      return std::uint64_t{1};
    };
    return detail::sweep("NAT-dist", s.name(), false, opt.samples, opt.policy,
                         eval);
  }
}

/// The full coherence suite at the given bound, deterministically ordered
/// by axiom id.
template <Instance I>
std::vector<AxiomReport> check_laplaza(const I &s, const CheckOptions &opt) {
  std::vector<AxiomReport> reports;
  for (const auto &axiom : laplaza_equations<I>())
    reports.push_back(check_equation(s, axiom, opt));
  reports.push_back(check_braiding_naturality(s, opt));
  reports.push_back(check_distributor_naturality(s, opt));
  std::sort(reports.begin(), reports.end(),
            [](const AxiomReport &a, const AxiomReport &b) {
              return a.axiom < b.axiom;
            });
  return reports;
}

/// Re-runs a single axiom family; used to confirm that recorded witnesses
/// re-fail.
template <Instance I>
std::optional<AxiomReport> check_laplaza_axiom(const I &s,
                                               const std::string &axiom_id,
                                               const CheckOptions &opt) {
  for (const auto &axiom : laplaza_equations<I>())
    if (axiom.id == axiom_id)
      return check_equation(s, axiom, opt);
  if (axiom_id == "NAT-c")
    return check_braiding_naturality(s, opt);
  if (axiom_id == "NAT-dist")
    return check_distributor_naturality(s, opt);
  return std::nullopt;
}

inline bool any_failure(const std::vector<AxiomReport> &reports) {
  return std::any_of(reports.begin(), reports.end(),
                     [](const AxiomReport &r) { return r.failed(); });
}

} // namespace rigcat

#endif
