#include "dadelab/rpmod.hpp"

#include <deque>

namespace dadelab {

namespace {

bool same_group(const GroupPtr& a, const GroupPtr& b) { return a == b || a->name() == b->name(); }

void require_same(const RPModule& M, const RPModule& N, const char* op) {
  if (!M.ring()->same_as(*N.ring())) throw RingMismatch(std::string(op) + ": modules over different rings");
  if (!same_group(M.group(), N.group())) {
    throw GroupMismatch(std::string(op) + ": modules over different groups");
  }
}

std::uint64_t word_exponent(const std::vector<std::uint64_t>& exps, const std::vector<std::size_t>& word,
                            std::uint64_t order) {
  std::uint64_t e = 0;
  for (auto i : word) e = (e + exps[i]) % order;
  return e;
}

}  // namespace

RingPtr coefficient_ring(const PGroup& P, bool over_O, int N) {
  if (!over_O) return Ring::prime_field(P.p());
  return build_ring(P.p(), P.exponent_log(), N);
}

std::uint64_t LinearCharacter::exponent_at(std::size_t element) const {
  return word_exponent(exponents, group->word(element), ring->root_order());
}

bool LinearCharacter::is_trivial() const {
  for (auto e : exponents) {
    if (e != 0) return false;
  }
  return true;
}

bool operator==(const LinearCharacter& a, const LinearCharacter& b) {
  return a.ring->same_as(*b.ring) && same_group(a.group, b.group) && a.exponents == b.exponents;
}

LinearCharacter trivial_character(RingPtr R, GroupPtr P) {
  std::vector<std::uint64_t> exps(P->generators().size(), 0);
  return {std::move(R), std::move(P), std::move(exps)};
}

LinearCharacter make_character(RingPtr R, GroupPtr P, std::vector<std::uint64_t> exponents) {
  if (exponents.size() != P->generators().size()) throw InvalidArgument("character: one value per generator required");
  const std::uint64_t order = R->root_order();
  for (auto& e : exponents) e %= order;
  for (const auto& rel : P->relations()) {
    std::uint64_t lhs = (exponents[rel.generator] + word_exponent(exponents, P->word(rel.element), order)) % order;
    if (lhs != word_exponent(exponents, P->word(rel.product), order)) {
      throw ValidationError("character: relation g" + std::to_string(rel.generator) + " * " +
                            std::to_string(rel.element) + " = " + std::to_string(rel.product) + " fails");
    }
  }
  return {std::move(R), std::move(P), std::move(exponents)};
}

LinearCharacter operator*(const LinearCharacter& a, const LinearCharacter& b) {
  if (!a.ring->same_as(*b.ring)) throw RingMismatch("character product: different rings");
  if (!same_group(a.group, b.group)) throw GroupMismatch("character product: different groups");
  LinearCharacter out = a;
  for (std::size_t i = 0; i < out.exponents.size(); ++i) {
    out.exponents[i] = (a.exponents[i] + b.exponents[i]) % a.ring->root_order();
  }
  return out;
}

LinearCharacter inverse(const LinearCharacter& a) { return power(a, -1); }

LinearCharacter power(const LinearCharacter& a, std::int64_t e) {
  const auto order = static_cast<std::int64_t>(a.ring->root_order());
  const std::int64_t m = ((e % order) + order) % order;
  LinearCharacter out = a;
  for (auto& x : out.exponents) x = static_cast<std::uint64_t>((static_cast<std::int64_t>(x) * m) % order);
  return out;
}

RPModule::RPModule(RingPtr ring, GroupPtr group, std::vector<Matrix> action, bool validate_now)
    : ring_(std::move(ring)), group_(std::move(group)), dim_(action.empty() ? 0 : action[0].rows()),
      action_(std::move(action)) {
  check_shapes();
  if (validate_now) validate();
}

RPModule::RPModule(RingPtr ring, GroupPtr group, std::size_t dim, std::vector<Matrix> action, bool validate_now)
    : ring_(std::move(ring)), group_(std::move(group)), dim_(dim), action_(std::move(action)) {
  check_shapes();
  if (validate_now) validate();
}

void RPModule::check_shapes() const {
  if (action_.size() != group_->generators().size()) {
    throw ValidationError("module: expected " + std::to_string(group_->generators().size()) + " generator matrices");
  }
  for (const auto& A : action_) {
    if (A.rows() != dim_ || A.cols() != dim_) throw ValidationError("module: action matrices must be square of equal size");
  }
}

std::vector<Matrix> RPModule::element_matrices() const {
  const PGroup& P = *group_;
  std::vector<Matrix> mats(P.order());
  std::vector<bool> done(P.order(), false);
  mats[0] = linalg::identity(*ring_, dim_);
  done[0] = true;
  // Words are built breadth first, so the parent of x (its word minus the
  // leading letter) is always shorter.
  std::deque<std::size_t> queue{0};
  while (!queue.empty()) {
    std::size_t x = queue.front();
    queue.pop_front();
    for (std::size_t i = 0; i < P.generators().size(); ++i) {
      std::size_t y = P.mul(P.generators()[i], x);
      if (done[y]) continue;
      const auto& w = P.word(y);
      if (w.empty() || w[0] != i || w.size() != P.word(x).size() + 1) continue;
      mats[y] = linalg::mul(*ring_, action_[i], mats[x]);
      done[y] = true;
      queue.push_back(y);
    }
  }
  return mats;
}

Matrix RPModule::element_matrix(std::size_t x) const {
  Matrix A = linalg::identity(*ring_, dim_);
  const auto& w = group_->word(x);
  for (auto it = w.rbegin(); it != w.rend(); ++it) A = linalg::mul(*ring_, action_[*it], A);
  return A;
}

void RPModule::validate() const {
  for (std::size_t i = 0; i < action_.size(); ++i) {
    if (!linalg::is_invertible(*ring_, action_[i])) {
      throw ValidationError("module: action of generator " + std::to_string(i) + " is not invertible");
    }
  }
  const auto mats = element_matrices();
  for (const auto& rel : group_->relations()) {
    if (linalg::mul(*ring_, action_[rel.generator], mats[rel.element]) != mats[rel.product]) {
      throw ValidationError("module: relation g" + std::to_string(rel.generator) + " * x" +
                            std::to_string(rel.element) + " = x" + std::to_string(rel.product) +
                            " violated in " + group_->name());
    }
  }
}

bool operator==(const RPModule& a, const RPModule& b) {
  return a.ring_->same_as(*b.ring_) && a.group_->name() == b.group_->name() && a.action_ == b.action_;
}

RPModule zero_module(RingPtr R, GroupPtr P) {
  std::vector<Matrix> action(P->generators().size(), Matrix(0, 0));
  return RPModule(std::move(R), std::move(P), std::move(action), false);
}

RPModule trivial_module(RingPtr R, GroupPtr P) {
  std::vector<Matrix> action(P->generators().size(), linalg::identity(*R, 1));
  RPModule M(std::move(R), P, 1, std::move(action), false);
  M.set_permutation_tags({P->whole_group_class().id});
  return M;
}

RPModule permutation_module(RingPtr R, GroupPtr P, const SubgroupClass& Q) {
  const CosetAction act = P->coset_action(Q);
  std::vector<Matrix> action;
  for (const auto& perm : act.generator_perms) {
    Matrix A(act.size(), act.size());
    for (std::size_t c = 0; c < act.size(); ++c) A(perm[c], c) = R->one();
    action.push_back(std::move(A));
  }
  RPModule M(std::move(R), std::move(P), act.size(), std::move(action), false);
  M.set_permutation_tags({Q.id});
  return M;
}

RPModule regular_module(RingPtr R, GroupPtr P) {
  const SubgroupClass& one = P->trivial_class();
  return permutation_module(std::move(R), std::move(P), one);
}

RPModule character_module(const LinearCharacter& chi) {
  std::vector<Matrix> action;
  for (auto e : chi.exponents) {
    Matrix A(1, 1);
    A(0, 0) = chi.ring->zeta_pow(static_cast<std::int64_t>(e));
    action.push_back(std::move(A));
  }
  RPModule M(chi.ring, chi.group, 1, std::move(action), false);
  if (chi.is_trivial()) M.set_permutation_tags({chi.group->whole_group_class().id});
  return M;
}

RPModule direct_sum(const RPModule& M, const RPModule& N) {
  require_same(M, N, "direct_sum");
  std::vector<Matrix> action;
  for (std::size_t i = 0; i < M.action().size(); ++i) action.push_back(linalg::block_diag(M.action()[i], N.action()[i]));
  RPModule S(M.ring(), M.group(), M.dim() + N.dim(), std::move(action), false);
  if ((M.dim() == 0 || !M.permutation_tags().empty()) && (N.dim() == 0 || !N.permutation_tags().empty())) {
    auto tags = M.permutation_tags();
    tags.insert(tags.end(), N.permutation_tags().begin(), N.permutation_tags().end());
    S.set_permutation_tags(std::move(tags));
  }
  return S;
}

RPModule direct_sum(const std::vector<RPModule>& parts) {
  if (parts.empty()) throw InvalidArgument("direct_sum: no summands");
  RPModule S = parts[0];
  for (std::size_t i = 1; i < parts.size(); ++i) S = direct_sum(S, parts[i]);
  return S;
}

RPModule tensor(const RPModule& M, const RPModule& N) {
  require_same(M, N, "tensor");
  std::vector<Matrix> action;
  for (std::size_t i = 0; i < M.action().size(); ++i) {
    action.push_back(linalg::kron(*M.ring(), M.action()[i], N.action()[i]));
  }
  return RPModule(M.ring(), M.group(), M.dim() * N.dim(), std::move(action), false);
}

RPModule dual(const RPModule& M) {
  std::vector<Matrix> action;
  for (const auto& A : M.action()) action.push_back(linalg::transpose(linalg::inverse(*M.ring(), A)));
  RPModule D(M.ring(), M.group(), M.dim(), std::move(action), false);
  D.set_permutation_tags(M.permutation_tags());
  return D;
}

RPModule restrict(const RPModule& M, const SubgroupClass& Q) {
  auto sub = M.group()->subgroup_group(Q);
  std::vector<Matrix> action;
  for (auto g : Q.generators) action.push_back(M.element_matrix(g));
  return RPModule(M.ring(), sub.group, M.dim(), std::move(action), false);
}

RPModule conjugate(const RPModule& M, const Matrix& B) {
  const Ring& R = *M.ring();
  Matrix Bi = linalg::inverse(R, B);
  std::vector<Matrix> action;
  for (const auto& A : M.action()) action.push_back(linalg::mul(R, Bi, linalg::mul(R, A, B)));
  return RPModule(M.ring(), M.group(), M.dim(), std::move(action), false);
}

RPModule reduce_mod_p(const RPModule& L) {
  if (L.ring()->is_field()) throw InvalidArgument("reduce_mod_p: module is already over the residue field");
  std::vector<Matrix> action;
  for (const auto& A : L.action()) action.push_back(linalg::residue(*L.ring(), A));
  RPModule M(L.ring()->residue_field(), L.group(), L.dim(), std::move(action), false);
  M.set_permutation_tags(L.permutation_tags());
  return M;
}

LinearCharacter determinant_character(const RPModule& L) {
  if (L.ring()->is_field()) throw InvalidArgument("determinant_character: defined for lattices over O only");
  std::vector<std::uint64_t> exps;
  for (std::size_t i = 0; i < L.action().size(); ++i) {
    Element d = linalg::determinant(*L.ring(), L.action()[i]);
    auto a = L.ring()->match_root_of_unity(d);
    if (!a) {
      throw DeterminantNotRootOfUnity("determinant of generator " + std::to_string(i) + " is " +
                                      L.ring()->to_string(d) + ", not a root of unity");
    }
    exps.push_back(*a);
  }
  return make_character(L.ring(), L.group(), std::move(exps));
}

RPModule twist(const RPModule& L, const LinearCharacter& chi) {
  if (!L.ring()->same_as(*chi.ring)) throw RingMismatch("twist: character over a different ring");
  if (!same_group(L.group(), chi.group)) throw GroupMismatch("twist: character of a different group");
  std::vector<Matrix> action;
  for (std::size_t i = 0; i < L.action().size(); ++i) {
    action.push_back(linalg::scale(*L.ring(), chi.ring->zeta_pow(static_cast<std::int64_t>(chi.exponents[i])),
                                   L.action()[i]));
  }
  return RPModule(L.ring(), L.group(), L.dim(), std::move(action), false);
}

}  // namespace dadelab
