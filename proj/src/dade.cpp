#include "dadelab/dade.hpp"

#include <cstdlib>

#include "dadelab/heller.hpp"
#include "dadelab/structure.hpp"

namespace dadelab {

namespace {

DadeElement word_value(const std::vector<DadeElement>& gens, const RelationWord& w, std::uint64_t seed) {
  if (w.empty()) throw InvalidArgument("relation word is empty");
  DadeElement acc = identity_element(gens.at(w[0].first).ring(), gens.at(w[0].first).group());
  for (const auto& [i, e] : w) acc = mul(acc, power(gens.at(i), e, seed), seed);
  return acc;
}

std::string word_to_string(const std::vector<Generator>& gens, const RelationWord& w) {
  std::string s;
  for (const auto& [i, e] : w) {
    if (!s.empty()) s += "*";
    s += gens.at(i).name + "^" + std::to_string(e);
  }
  return s.empty() ? "1" : s;
}

}  // namespace

DadeElement element_of(const RPModule& M, std::uint64_t seed) {
  if (!is_endo_permutation(M, seed)) throw NotEndoPermutation("element_of: module is not endo-permutation");
  Cap c;
  try {
    c = cap(M, seed);
  } catch (const NotCapped& e) {
    throw NotStronglyCapped(std::string("element_of: ") + e.what());
  }
  if (c.multiplicity != 1) {
    throw NotStronglyCapped("element_of: cap has multiplicity " + std::to_string(c.multiplicity));
  }
  return {c.module};
}

DadeElement element_of_unchecked(const RPModule& M, std::uint64_t seed) { return {cap(M, seed).module}; }

DadeElement identity_element(RingPtr R, GroupPtr P) { return {trivial_module(std::move(R), std::move(P))}; }

DadeElement mul(const DadeElement& a, const DadeElement& b, std::uint64_t seed) {
  try {
    return {cap(tensor(a.cap, b.cap), seed).module};
  } catch (const NotCapped& e) {
    throw InternalInvariantViolation(std::string("Dade product: ") + e.what());
  }
}

DadeElement inverse(const DadeElement& a) { return {dual(a.cap)}; }

DadeElement power(const DadeElement& a, int e, std::uint64_t seed) {
  DadeElement base = e < 0 ? inverse(a) : a;
  DadeElement acc = identity_element(a.ring(), a.group());
  for (int i = 0; i < std::abs(e); ++i) acc = mul(acc, base, seed);
  return acc;
}

bool is_identity(const DadeElement& a) {
  if (a.cap.dim() != 1) return false;
  for (const auto& A : a.cap.action()) {
    if (!a.ring()->is_one(A(0, 0))) return false;
  }
  return true;
}

bool same_class(const DadeElement& a, const DadeElement& b, std::uint64_t seed) {
  return is_isomorphic(a.cap, b.cap, seed);
}

std::string OrderResult::to_string() const {
  return order ? std::to_string(*order) : "Unresolved(" + std::to_string(bound) + ")";
}

OrderResult order(const DadeElement& a, std::size_t bound, std::uint64_t seed) {
  if (bound < 1) throw InvalidArgument("order: bound must be at least 1");
  OrderResult out;
  out.bound = bound;
  DadeElement c = a;
  for (std::size_t j = 1; j <= bound; ++j) {
    if (is_identity(c)) {
      out.order = j;
      return out;
    }
    if (j < bound) c = mul(c, a, seed);
  }
  return out;
}

CharacterGroup character_group(GroupPtr P, RingPtr O) {
  if (O->is_field() || O->n() < P->exponent_log()) {
    throw InsufficientRoots("character_group: ring lacks a primitive " + std::to_string(P->exponent()) +
                            "-th root of unity");
  }
  CharacterGroup cg;
  cg.ring = O;
  cg.group = P;
  const std::size_t gens = P->generators().size();
  const std::uint64_t q = O->root_order();
  std::vector<std::uint64_t> exps(gens, 0);
  for (;;) {
    try {
      cg.elements.push_back(make_character(O, P, exps));
    } catch (const ValidationError&) {
    }
    std::size_t i = 0;
    while (i < gens && ++exps[i] == q) exps[i++] = 0;
    if (i == gens) break;
  }
  cg.table.assign(cg.size(), std::vector<std::size_t>(cg.size()));
  for (std::size_t a = 0; a < cg.size(); ++a) {
    for (std::size_t b = 0; b < cg.size(); ++b) {
      const auto prod = cg.elements[a] * cg.elements[b];
      std::size_t idx = cg.size();
      for (std::size_t c = 0; c < cg.size(); ++c) {
        if (cg.elements[c] == prod) idx = c;
      }
      if (idx == cg.size()) throw InternalInvariantViolation("character_group: not closed under products");
      cg.table[a][b] = idx;
    }
  }
  return cg;
}

DadeElement reduce_class(const DadeElement& a, std::uint64_t seed) {
  if (a.ring()->is_field()) throw InvalidArgument("reduce_class: class is already over k");
  return element_of_unchecked(reduce_mod_p(a.cap), seed);
}

RPModule determinant_one_lift(const RPModule& M, const RPModule& L0, std::uint64_t seed) {
  if (!M.ring()->is_field() || L0.ring()->is_field()) {
    throw RingMismatch("determinant_one_lift: expects a k-module and an O-lattice");
  }
  const auto p = static_cast<std::size_t>(M.ring()->p());
  if (M.dim() % p == 0) {
    throw NonInvertibleDimension("determinant_one_lift: dimension " + std::to_string(M.dim()) + " divisible by p");
  }
  if (!is_isomorphic(reduce_mod_p(L0), M, seed)) throw NotALift("determinant_one_lift: reduction is not isomorphic to M");
  const LinearCharacter delta = determinant_character(L0);
  const auto q = static_cast<std::int64_t>(L0.ring()->root_order());
  std::int64_t t = 0;
  const std::int64_t d = static_cast<std::int64_t>(M.dim()) % q;
  while (t < q && (t * d) % q != 1 % q) ++t;
  RPModule phi = twist(L0, power(delta, -t));
  if (!determinant_character(phi).is_trivial()) {
    throw InternalInvariantViolation("determinant_one_lift: twisted lattice has nontrivial determinant");
  }
  return phi;
}

std::vector<Generator> configured_generators(GroupPtr P, int N) {
  RingPtr k = coefficient_ring(*P, false, N);
  RingPtr O = coefficient_ring(*P, true, N);
  std::vector<Generator> gens;
  gens.push_back({"omega", syzygy(trivial_module(k, P)), syzygy(trivial_module(O, P))});
  if (P->is_cyclic()) return gens;
  const bool maximal_only = !P->is_abelian();
  for (const auto& Q : P->subgroup_classes()) {
    if (Q.order() == 1 || Q.order() == P->order()) continue;
    if (maximal_only && Q.index_in_P != static_cast<std::size_t>(P->p())) continue;
    gens.push_back({"rel" + std::to_string(Q.id), relative_syzygy(k, P, Q), relative_syzygy(O, P, Q)});
  }
  return gens;
}

bool SectionReport::all_passed() const {
  for (const auto& e : entries) {
    if (!e.passed) return false;
  }
  return true;
}

SectionReport section_on_generators(const std::vector<Generator>& generators, const std::vector<RelationWord>& relations,
                                    std::size_t bound, std::uint64_t seed) {
  SectionReport report;
  report.limitation =
      "checked on the configured generators only; the list is not certified to generate D_k(P)";
  std::vector<DadeElement> k_classes, o_classes;
  for (const auto& g : generators) {
    DadeElement kc = element_of(g.k_module, seed);
    DadeElement oc = element_of_unchecked(determinant_one_lift(g.k_module, g.lift, seed), seed);
    const bool red = same_class(reduce_class(oc, seed), kc, seed);
    report.entries.push_back({g.name, "reduction", red, red ? "reduce(Phi) = generator" : "reduce(Phi) differs"});
    const OrderResult ok = order(kc, bound, seed);
    const OrderResult oo = order(oc, bound, seed);
    const bool same = ok.order == oo.order;
    report.entries.push_back({g.name, "order", same, "k: " + ok.to_string() + ", O: " + oo.to_string()});
    k_classes.push_back(std::move(kc));
    o_classes.push_back(std::move(oc));
  }
  for (const auto& w : relations) {
    if (!is_identity(word_value(k_classes, w, seed))) continue;
    const bool holds = is_identity(word_value(o_classes, w, seed));
    report.entries.push_back({word_to_string(generators, w), "relation", holds,
                              holds ? "identity over k and O" : "identity over k but not over O"});
  }
  return report;
}

PhiChecks phi_multiplicativity_check(const RPModule& M, const RPModule& LM, const RPModule& N, const RPModule& LN,
                                     std::uint64_t seed) {
  PhiChecks out;
  const RPModule phi_m = determinant_one_lift(M, LM, seed);
  const RPModule phi_n = determinant_one_lift(N, LN, seed);
  out.dual = is_isomorphic(dual(phi_m), determinant_one_lift(dual(M), dual(LM), seed), seed);
  out.tensor = is_isomorphic(determinant_one_lift(tensor(M, N), tensor(LM, LN), seed), tensor(phi_m, phi_n), seed);
  out.permutation = is_permutation_module(determinant_one_lift(tensor(M, dual(M)), tensor(LM, dual(LM)), seed), seed);
  return out;
}

}  // namespace dadelab
