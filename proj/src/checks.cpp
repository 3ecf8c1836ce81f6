#include "checks.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <random>
#include <sstream>

#include "dadelab/dade.hpp"
#include "dadelab/heller.hpp"
#include "dadelab/oracle.hpp"
#include "dadelab/structure.hpp"

namespace dadelab::harness::checks {

namespace {

Outcome pass(std::string d) { return {Status::kPass, std::move(d)}; }
Outcome fail(std::string d) { return {Status::kFail, std::move(d)}; }
Outcome unresolved(std::string d) { return {Status::kUnresolved, std::move(d)}; }

struct Rings {
  RingPtr k;
  RingPtr O;
};

Rings rings(const GroupPtr& P, int N) { return {coefficient_ring(*P, false, N), coefficient_ring(*P, true, N)}; }

Element det_at(const RPModule& L, std::size_t g) { return linalg::determinant(*L.ring(), L.element_matrix(g)); }

// Sign of x -> g x on the elements of P, from its cycle lengths.
int permutation_sign(const PGroup& P, std::size_t g) {
  std::vector<bool> seen(P.order(), false);
  int sign = 1;
  for (std::size_t x = 0; x < P.order(); ++x) {
    if (seen[x]) continue;
    std::size_t len = 0;
    for (std::size_t y = x; !seen[y]; y = P.mul(g, y)) {
      seen[y] = true;
      ++len;
    }
    if (len % 2 == 0) sign = -sign;
  }
  return sign;
}

// The k-module, its native lattice lift and a display name.
struct Pair {
  std::string name;
  RPModule k_module;
  RPModule lift;
};

// Omega^1 and the relative syzygies over proper nontrivial subgroups.
std::vector<Pair> syzygy_pairs(const GroupPtr& P, const Rings& R) {
  std::vector<Pair> out;
  out.push_back({"omega", syzygy(trivial_module(R.k, P)), syzygy(trivial_module(R.O, P))});
  for (const auto& Q : P->subgroup_classes()) {
    if (Q.order() == 1 || Q.order() == P->order()) continue;
    out.push_back({"rel" + std::to_string(Q.id), relative_syzygy(R.k, P, Q), relative_syzygy(R.O, P, Q)});
  }
  return out;
}

bool intertwines(const Ring& R, const Matrix& T, const RPModule& M, const RPModule& N) {
  if (!linalg::is_invertible(R, T)) return false;
  for (std::size_t i = 0; i < M.action().size(); ++i) {
    if (linalg::mul(R, T, M.generator_matrix(i)) != linalg::mul(R, N.generator_matrix(i), T)) return false;
  }
  return true;
}

std::string join(const std::vector<std::string>& parts, const char* sep = "; ") {
  std::string s;
  for (const auto& p : parts) {
    if (!s.empty()) s += sep;
    s += p;
  }
  return s;
}

}  // namespace

Outcome d1_regular_determinant(const GroupPtr& P, int N, std::uint64_t) {
  const auto R = rings(P, N);
  const RPModule reg = regular_module(R.O, P);
  std::size_t generating = 0;
  for (std::size_t g = 1; g < P->order(); ++g) {
    const bool gen = P->element_order(g) == P->order();
    generating += gen;
    const Element expected = R.O->from_int(gen ? -1 : 1);
    const Element d = det_at(reg, g);
    if (d != expected || R.O->from_int(permutation_sign(*P, g)) != expected) {
      return fail("g=" + std::to_string(g) + " det=" + R.O->to_string(d) + " expected " + R.O->to_string(expected));
    }
  }
  return pass(std::to_string(P->order() - 1) + " elements; " + std::to_string(generating) +
              " generators with det -1, others 1");
}

Outcome d2_omega_determinant_cyclic(const GroupPtr& P, int N, std::uint64_t) {
  const auto R = rings(P, N);
  const RPModule om = syzygy(trivial_module(R.O, P));
  const Element minus_one = R.O->from_int(-1);
  std::size_t count = 0;
  for (std::size_t g = 0; g < P->order(); ++g) {
    if (P->element_order(g) != P->order()) continue;
    const Element d = det_at(om, g);
    if (d != minus_one) return fail("g=" + std::to_string(g) + " det(g, Omega^1(O))=" + R.O->to_string(d));
    ++count;
  }
  return pass("det(g, Omega^1(O)) = -1 for " + std::to_string(count) + " generators");
}

Outcome d3_omega_determinant_noncyclic(const GroupPtr& P, int N, std::uint64_t) {
  const auto R = rings(P, N);
  std::size_t count = 0;
  for (int m : {-3, -2, -1, 1, 2, 3}) {
    const RPModule L = omega_power(R.O, P, m);
    for (std::size_t g = 1; g < P->order(); ++g) {
      if (P->element_order(g) == P->order()) continue;
      const Element d = det_at(L, g);
      if (!R.O->is_one(d)) {
        return fail("m=" + std::to_string(m) + " g=" + std::to_string(g) + " det=" + R.O->to_string(d));
      }
      ++count;
    }
  }
  return pass(std::to_string(count) + " determinants equal 1 for m in -3..3");
}

Outcome d4_phi_sign_twist(const GroupPtr& P, int N, std::uint64_t seed) {
  const auto R = rings(P, N);
  const RPModule minus = character_module(make_character(R.O, P, {R.O->root_order() / 2}));
  std::vector<Pair> cases;
  cases.push_back({"omega", syzygy(trivial_module(R.k, P)), syzygy(trivial_module(R.O, P))});
  for (const auto& Q : P->subgroup_classes()) {
    if (Q.index_in_P < 4) continue;
    cases.push_back({"rel" + std::to_string(Q.id), relative_syzygy(R.k, P, Q), relative_syzygy(R.O, P, Q)});
  }
  std::vector<std::string> witnesses;
  for (const auto& c : cases) {
    const RPModule phi = determinant_one_lift(c.k_module, c.lift, seed);
    const RPModule target = tensor(minus, c.lift);
    const auto T = find_isomorphism(phi, target, seed);
    if (!T) return fail(c.name + ": Phi is not isomorphic to O^- (x) lift");
    if (!intertwines(*R.O, *T, phi, target)) return fail(c.name + ": witness does not intertwine");
    std::ostringstream w;
    w << c.name << " witness " << T->rows() << "x" << T->cols();
    if (T->rows() <= 3) {
      w << " [";
      for (std::size_t i = 0; i < T->rows(); ++i) {
        for (std::size_t j = 0; j < T->cols(); ++j) w << (i || j ? " " : "") << R.O->to_string((*T)(i, j));
        if (i + 1 < T->rows()) w << " |";
      }
      w << "]";
    }
    witnesses.push_back(w.str());
  }
  return pass(join(witnesses));
}

Outcome d5_determinant_identities(const GroupPtr& P, int N, std::uint64_t seed) {
  const auto R = rings(P, N);
  const Ring& O = *R.O;
  std::vector<std::pair<std::string, RPModule>> pool;
  pool.emplace_back("O", trivial_module(R.O, P));
  pool.emplace_back("OP", regular_module(R.O, P));
  pool.emplace_back("Omega^1", syzygy(trivial_module(R.O, P)));
  pool.emplace_back("Omega^-1", cosyzygy(trivial_module(R.O, P)));
  for (const auto& Q : P->subgroup_classes()) {
    if (Q.order() == 1 || Q.order() == P->order()) continue;
    pool.emplace_back("O[P/Q" + std::to_string(Q.id) + "]", permutation_module(R.O, P, Q));
    pool.emplace_back("rel" + std::to_string(Q.id), relative_syzygy(R.O, P, Q));
  }
  const auto X = character_group(P, R.O);
  for (std::size_t i = 0; i < X.size(); ++i) pool.emplace_back("chi" + std::to_string(i), character_module(X.elements[i]));

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  const std::size_t pairs = 20;
  for (std::size_t t = 0; t < pairs; ++t) {
    const auto& [na, A] = pool[pick(rng)];
    const auto& [nb, B] = pool[pick(rng)];
    const RPModule AB = tensor(A, B);
    const RPModule Ad = dual(A);
    const RPModule sum = direct_sum(A, B);
    for (std::size_t g = 0; g < P->order(); ++g) {
      const Element da = det_at(A, g), db = det_at(B, g);
      const std::string where = na + ", " + nb + ", g=" + std::to_string(g);
      if (!O.is_one(O.mul(det_at(Ad, g), da))) return fail("dual determinant fails for " + where);
      const Element expected = O.mul(O.pow(da, B.dim()), O.pow(db, A.dim()));
      if (det_at(AB, g) != expected) return fail("tensor determinant fails for " + where);
      if (det_at(sum, g) != O.mul(da, db)) return fail("sum determinant fails for " + where);
    }
  }
  std::string details = std::to_string(pairs) + " random pairs satisfy the determinant identities";

  const std::string name = P->name();
  if (name != "C4" && name != "C2xC2" && name != "Q8") return pass(details);
  const auto gens = syzygy_pairs(P, R);
  std::size_t phi_checks = 0;
  auto run = [&](const Pair& a, const Pair& b) -> std::optional<std::string> {
    const PhiChecks c = phi_multiplicativity_check(a.k_module, a.lift, b.k_module, b.lift, seed);
    ++phi_checks;
    if (c.dual && c.tensor && c.permutation) return std::nullopt;
    return "Phi checks (" + a.name + ", " + b.name + "): dual=" + std::to_string(c.dual) +
           " tensor=" + std::to_string(c.tensor) + " permutation=" + std::to_string(c.permutation);
  };
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = i; j < gens.size(); ++j) {
      if (auto f = run(gens[i], gens[j])) return fail(*f);
    }
  }
  const Pair dual_omega{"omega*", dual(gens[0].k_module), dual(gens[0].lift)};
  if (auto f = run(gens[0], dual_omega)) return fail(*f);
  return pass(details + "; " + std::to_string(phi_checks) + " Phi multiplicativity pairs pass");
}

Outcome d6_odd_multiplicativity(const GroupPtr& P, int N, std::uint64_t seed) {
  const auto R = rings(P, N);
  for (const auto& Q : P->subgroup_classes()) {
    if (!determinant_character(permutation_module(R.O, P, Q)).is_trivial()) {
      return fail("O[P/Q" + std::to_string(Q.id) + "] has nontrivial determinant");
    }
  }
  const auto gens = syzygy_pairs(P, R);
  std::vector<RPModule> phis;
  for (const auto& g : gens) phis.push_back(determinant_one_lift(g.k_module, g.lift, seed));
  std::size_t pairs = 0;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = i; j < gens.size(); ++j) {
      const RPModule lhs = cap(tensor(phis[i], phis[j]), seed).module;
      const RPModule capped = cap(tensor(gens[i].k_module, gens[j].k_module), seed).module;
      const RPModule lift = cap(tensor(gens[i].lift, gens[j].lift), seed).module;
      if (!is_isomorphic(lhs, determinant_one_lift(capped, lift, seed), seed)) {
        return fail("cap(Phi_" + gens[i].name + " (x) Phi_" + gens[j].name + ") differs from Phi of the cap");
      }
      ++pairs;
    }
  }
  return pass(std::to_string(P->subgroup_classes().size()) + " permutation lattices with trivial determinant; " +
              std::to_string(pairs) + " pairs multiplicative");
}

Outcome s1_order_four(const GroupPtr& P, int N, std::uint64_t seed) {
  const auto R = rings(P, N);
  const RPModule triv = trivial_module(R.k, P);
  if (is_isomorphic(omega_power(R.k, P, 2), triv, seed)) return fail("Omega^2(k) is isomorphic to k");
  if (!is_isomorphic(omega_power(R.k, P, 4), triv, seed)) return fail("Omega^4(k) is not isomorphic to k");
  const RPModule M = syzygy(triv);
  const OrderResult ok = order(element_of(M, seed), kDefaultOrderBound, seed);
  const RPModule phi = determinant_one_lift(M, syzygy(trivial_module(R.O, P)), seed);
  const OrderResult oo = order(element_of_unchecked(phi, seed), kDefaultOrderBound, seed);
  const std::string d = "order over k: " + ok.to_string() + ", order of Phi over O: " + oo.to_string();
  return ok.order == 4u && oo.order == 4u ? pass(d) : fail(d);
}

Outcome s2_order_two(const GroupPtr& P, int N, std::uint64_t seed) {
  const auto R = rings(P, N);
  struct Candidate {
    std::string name;
    DadeElement k_class;
    RPModule lift;
  };
  std::vector<Candidate> singles;
  for (const auto& Q : P->subgroup_classes()) {
    if (Q.order() == P->order()) continue;
    const RPModule M = relative_syzygy(R.k, P, Q);
    singles.push_back({"rel" + std::to_string(Q.id), element_of(M, seed),
                       cap(relative_syzygy(R.O, P, Q), seed).module});
  }
  auto product = [&](const Candidate& a, const Candidate& b) {
    return Candidate{a.name + "*" + b.name, mul(a.k_class, b.k_class, seed), cap(tensor(a.lift, b.lift), seed).module};
  };
  std::vector<std::string> log;
  auto examine = [&](const Candidate& c) -> std::optional<Outcome> {
    if (is_identity(c.k_class)) {
      log.push_back(c.name + ":1");
      return std::nullopt;
    }
    if (!is_identity(mul(c.k_class, c.k_class, seed))) {
      log.push_back(c.name + ":not 2");
      return std::nullopt;
    }
    log.push_back(c.name + ":2");
    const RPModule phi = determinant_one_lift(c.k_class.cap, c.lift, seed);
    const OrderResult oo = order(element_of_unchecked(phi, seed), kSuiteOrderBound, seed);
    const std::string d = c.name + " has order 2 over k; Phi order " + oo.to_string() + "; searched " + join(log, ", ");
    return oo.order == 2u ? pass(d) : fail(d);
  };
  for (const auto& c : singles) {
    if (auto r = examine(c)) return *r;
  }
  std::erase_if(singles, [](const Candidate& c) { return is_identity(c.k_class); });
  for (const auto& c : singles) {
    if (auto r = examine(product(c, c))) return *r;
  }
  for (std::size_t i = 0; i < singles.size(); ++i) {
    for (std::size_t j = i + 1; j < singles.size(); ++j) {
      if (auto r = examine(product(singles[i], singles[j]))) return *r;
    }
  }
  return unresolved("no class of order 2 among relative syzygies, their squares and pairwise products; searched " +
                    join(log, ", "));
}

Outcome s3_section(const GroupPtr& P, int N, std::uint64_t seed) {
  const auto gens = configured_generators(P, N);
  std::vector<RelationWord> relations;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    relations.push_back({{i, 2}});
    relations.push_back({{i, 4}});
    relations.push_back({{i, 1}, {i, -1}});
  }
  const SectionReport report = section_on_generators(gens, relations, kSuiteOrderBound, seed);
  std::vector<std::string> failed, orders;
  for (const auto& e : report.entries) {
    if (!e.passed) failed.push_back(e.generator + " " + e.check + ": " + e.detail);
    if (e.check == "order") orders.push_back(e.generator + " (" + e.detail + ")");
  }
  if (!failed.empty()) return fail(join(failed));
  if (P->name() == "C2xC2" && orders.front() != "omega (k: Unresolved(4), O: Unresolved(4))") {
    return fail("expected Omega^1 unresolved at bound 4 over both rings: " + orders.front());
  }
  return pass(std::to_string(report.entries.size()) + " entries pass; " + join(orders));
}

Outcome k1_kernel(const GroupPtr& P, int N, std::uint64_t seed) {
  const auto R = rings(P, N);
  const auto X = character_group(P, R.O);
  const std::size_t expected = P->order() / P->commutator_subgroup().size();
  if (X.size() != expected) {
    return fail("|X(P)| = " + std::to_string(X.size()) + ", expected " + std::to_string(expected));
  }
  std::vector<RPModule> lattices;
  for (const auto& chi : X.elements) {
    lattices.push_back(character_module(chi));
    if (!is_identity(reduce_class(element_of_unchecked(lattices.back(), seed), seed))) {
      return fail("a character lattice does not reduce to the identity");
    }
  }
  for (std::size_t i = 0; i < lattices.size(); ++i) {
    for (std::size_t j = i + 1; j < lattices.size(); ++j) {
      if (is_isomorphic(lattices[i], lattices[j], seed)) return fail("two character lattices are isomorphic");
    }
  }
  // Every assignment of roots of unity to the generators that defines a lattice.
  const std::size_t gens = P->generators().size();
  const std::uint64_t q = R.O->root_order();
  std::vector<std::uint64_t> exps(gens, 0);
  std::size_t found = 0;
  for (;;) {
    std::vector<Matrix> action;
    for (auto e : exps) {
      Matrix A(1, 1);
      A(0, 0) = R.O->zeta_pow(static_cast<std::int64_t>(e));
      action.push_back(A);
    }
    try {
      const RPModule L(R.O, P, 1, action);
      if (!is_identity(reduce_class(element_of_unchecked(L, seed), seed))) return fail("1-dim lattice not in kernel");
      std::size_t matches = 0;
      for (const auto& C : lattices) matches += is_isomorphic(L, C, seed);
      if (matches != 1) return fail("1-dim lattice matches " + std::to_string(matches) + " characters");
      ++found;
    } catch (const ValidationError&) {
    }
    std::size_t i = 0;
    while (i < gens && ++exps[i] == q) exps[i++] = 0;
    if (i == gens) break;
  }
  if (found != X.size()) return fail(std::to_string(found) + " one-dimensional lattices found");
  std::size_t native = 0;
  for (const auto& g : configured_generators(P, N)) {
    for (const RPModule& L : {g.lift, determinant_one_lift(g.k_module, g.lift, seed)}) {
      const DadeElement a = element_of_unchecked(L, seed);
      if (a.cap.dim() != 1 || !is_identity(reduce_class(a, seed))) continue;
      ++native;
      if (std::find(X.elements.begin(), X.elements.end(), determinant_character(a.cap)) == X.elements.end()) {
        return fail(g.name + ": one-dimensional kernel class outside X(P)");
      }
    }
  }
  return pass("|X(P)| = " + std::to_string(X.size()) + " = |P/[P,P]|; " + std::to_string(found) +
              " one-dimensional kernel lattices; " + std::to_string(native) + " native lifts in X(P)");
}

Outcome t1_reduction_homomorphism(const GroupPtr& P, int N, std::uint64_t seed) {
  const auto R = rings(P, N);
  std::vector<std::pair<std::string, DadeElement>> pool;
  for (const auto& g : configured_generators(P, N)) {
    const DadeElement native = element_of_unchecked(g.lift, seed);
    const DadeElement phi = element_of_unchecked(determinant_one_lift(g.k_module, g.lift, seed), seed);
    pool.emplace_back(g.name, native);
    pool.emplace_back(g.name + "^-1", inverse(native));
    pool.emplace_back("Phi_" + g.name, phi);
  }
  const auto X = character_group(P, R.O);
  for (std::size_t i = 0; i < X.size(); ++i) {
    pool.emplace_back("chi" + std::to_string(i), element_of_unchecked(character_module(X.elements[i]), seed));
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  const std::size_t products = 20;
  for (std::size_t t = 0; t < products; ++t) {
    const auto& [na, a] = pool[pick(rng)];
    const auto& [nb, b] = pool[pick(rng)];
    const DadeElement lhs = reduce_class(mul(a, b, seed), seed);
    const DadeElement rhs = mul(reduce_class(a, seed), reduce_class(b, seed), seed);
    if (!same_class(lhs, rhs, seed)) return fail("reduce(" + na + " * " + nb + ") differs");
  }
  return pass(std::to_string(products) + " random products from a pool of " + std::to_string(pool.size()));
}

Outcome o1_oracle(const GroupPtr& P, int N, std::uint64_t seed) {
  const auto R = rings(P, N);
  const RPModule triv = trivial_module(R.k, P);
  std::vector<std::pair<std::string, RPModule>> atoms{
      {"k", triv}, {"kP", regular_module(R.k, P)}, {"Omega^1", syzygy(triv)}, {"Omega^-1", cosyzygy(triv)}};
  for (const auto& Q : P->subgroup_classes()) {
    if (Q.order() == 1 || Q.order() == P->order()) continue;
    atoms.emplace_back("k[P/Q" + std::to_string(Q.id) + "]", permutation_module(R.k, P, Q));
  }
  const std::size_t blocks = atoms.size();
  for (std::size_t i = 1; i < blocks; ++i) {
    for (std::size_t j = i; j < blocks; ++j) {
      if (atoms[i].second.dim() * atoms[j].second.dim() <= 6) {
        atoms.emplace_back(atoms[i].first + "(x)" + atoms[j].first, tensor(atoms[i].second, atoms[j].second));
      }
    }
  }
  std::mt19937_64 rng(seed);
  std::size_t tested = 0;
  std::vector<std::size_t> counts;
  std::string failure;
  // Multisets of atoms of total dimension at most 6, as non-decreasing index lists.
  std::function<void(std::size_t, std::size_t)> walk = [&](std::size_t start, std::size_t dim) {
    if (!failure.empty()) return;
    if (!counts.empty()) {
      std::vector<RPModule> parts;
      std::string name;
      for (auto c : counts) {
        parts.push_back(atoms[c].second);
        name += (name.empty() ? "" : "+") + atoms[c].first;
      }
      const RPModule M0 = direct_sum(parts);
      const RPModule M = conjugate(M0, linalg::random_invertible(*R.k, M0.dim(), rng));
      ++tested;

      const auto gf2 = oracle::to_gf2(M);
      std::vector<std::size_t> oracle_dims;
      for (const auto& piece : oracle::split_by_idempotents(gf2)) {
        if (oracle::jordan_type(piece[0]).size() != 1) {
          failure = name + ": oracle piece is not a single block";
          return;
        }
        oracle_dims.push_back(piece[0].size());
      }
      std::sort(oracle_dims.rbegin(), oracle_dims.rend());
      if (oracle_dims != oracle::jordan_type(gf2[0])) {
        failure = name + ": idempotent search disagrees with the Jordan type";
        return;
      }
      std::vector<std::size_t> dims;
      for (const auto& s : decompose(M, seed).summands) {
        if (oracle::split_by_idempotents(oracle::to_gf2(s.module)).size() != 1) {
          failure = name + ": a summand has a nontrivial idempotent";
          return;
        }
        dims.insert(dims.end(), s.multiplicity, s.module.dim());
      }
      std::sort(dims.rbegin(), dims.rend());
      if (dims != oracle_dims) {
        failure = name + ": decompose gives " + std::to_string(dims.size()) + " summands, oracle " +
                  std::to_string(oracle_dims.size());
        return;
      }
    }
    for (std::size_t a = start; a < atoms.size(); ++a) {
      if (dim + atoms[a].second.dim() > 6) continue;
      counts.push_back(a);
      walk(a, dim + atoms[a].second.dim());
      counts.pop_back();
    }
  };
  walk(0, 0);
  if (!failure.empty()) return fail(failure);
  return pass(std::to_string(tested) + " modules of dimension <= 6 agree with the oracle");
}

}  // namespace dadelab::harness::checks
