#include "rigcat/rigiface.hpp"

#include <algorithm>

namespace rigcat {

std::string FSetInstance::name() const {
  switch (mutation_) {
  case Mutation::none: return "fset";
  case Mutation::braiding_id: return "fset-mutant-c-id";
  case Mutation::dist_right_id: return "fset-mutant-dprime-id";
  case Mutation::sum_twist: return "fset-mutant-sum-twist";
  case Mutation::prod_twist: return "fset-mutant-prod-twist";
  }
  return "fset";
}

std::vector<FSetInstance::Object> FSetInstance::objects_up_to(nat bound) const {
  std::vector<Object> out(bound + 1);
  for (nat i = 0; i <= bound; ++i)
    out[i] = i;
  return out;
}

std::vector<Perm> FSetInstance::automorphisms(Object a) const {
  if (a > 10)
    fail(errc::enumeration_unsupported,
         "refusing to materialize S_" + std::to_string(a));
  std::vector<nat> table(a);
  for (nat i = 0; i < a; ++i)
    table[i] = i + 1;
  std::vector<Perm> out;
  do {
    out.push_back(Perm::unchecked(table));
  } while (std::next_permutation(table.begin(), table.end()));
  return out;
}

Perm FSetInstance::sample(Rng &rng, Object domain, Object codomain) const {
  if (domain != codomain)
    fail(errc::domain_mismatch, "hom-sets between distinct sizes are empty");
  return random_perm(rng, domain);
}

Perm FSetInstance::twist(Perm p, bool apply) {
  if (!apply || p.degree() < 2)
    return p;
  std::vector<nat> table = p.table();
  for (nat &v : table) {
    if (v == 1)
      v = 2;
    else if (v == 2)
      v = 1;
  }
  return Perm::unchecked(std::move(table));
}

std::vector<MatInstance::Object> MatInstance::objects_up_to(nat bound) const {
  std::vector<Object> out(bound + 1);
  for (nat i = 0; i <= bound; ++i)
    out[i] = i;
  return out;
}

const char *verdict_name(AxiomReport::Verdict v) {
  switch (v) {
  case AxiomReport::Verdict::pass: return "pass";
  case AxiomReport::Verdict::fail: return "fail";
  case AxiomReport::Verdict::vacuous: return "vacuous";
  }
  return "unknown";
}

} // namespace rigcat
