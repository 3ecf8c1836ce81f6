#include "dadelab/structure.hpp"

#include <random>

namespace dadelab {

namespace {

void require_compatible(const RPModule& M, const RPModule& N, const char* op) {
  if (!M.ring()->same_as(*N.ring())) throw RingMismatch(std::string(op) + ": modules over different rings");
  if (M.group() != N.group() && M.group()->name() != N.group()->name()) {
    throw GroupMismatch(std::string(op) + ": modules over different groups");
  }
}

Matrix flatten(const Matrix& A) {
  Matrix v(A.rows() * A.cols(), 1);
  for (std::size_t i = 0; i < A.rows(); ++i) {
    for (std::size_t j = 0; j < A.cols(); ++j) v(i * A.cols() + j, 0) = A(i, j);
  }
  return v;
}

Matrix column(const Matrix& A, std::size_t j) { return linalg::column_range(A, j, 1); }

// Basis of M built by applying generators to a minimal set of top vectors.
struct SpinBasis {
  Matrix basis;
  std::vector<std::ptrdiff_t> parent;  // -1 for top vectors
  std::vector<std::size_t> via;        // generator index, or top index for tops
  std::vector<std::vector<bool>> tree_edge;
  std::size_t tops = 0;
};

SpinBasis spin_basis(const RPModule& M) {
  const Ring& R = *M.ring();
  const std::size_t d = M.dim();
  const std::size_t gens = M.action().size();
  Matrix rad(d, 0);
  for (const auto& A : M.action()) rad = linalg::hconcat(rad, linalg::sub(R, A, linalg::identity(R, d)));
  const std::size_t rad_cols = rad.cols();
  auto picked = linalg::independent_columns(R, linalg::hconcat(rad, linalg::identity(R, d)));

  SpinBasis sb;
  std::vector<Matrix> vecs;
  linalg::ResidueEchelon ech(static_cast<std::uint64_t>(R.p()), d);
  for (auto c : picked) {
    if (c < rad_cols) continue;
    Matrix e(d, 1);
    e(c - rad_cols, 0) = R.one();
    ech.insert_column(R, e, 0);
    vecs.push_back(std::move(e));
    sb.parent.push_back(-1);
    sb.via.push_back(sb.tops++);
  }
  sb.tree_edge.assign(d, std::vector<bool>(gens, false));
  for (std::size_t k = 0; k < vecs.size() && vecs.size() < d; ++k) {
    for (std::size_t i = 0; i < gens && vecs.size() < d; ++i) {
      Matrix w = linalg::mul(R, M.action()[i], vecs[k]);
      if (!ech.insert_column(R, w, 0)) continue;
      vecs.push_back(std::move(w));
      sb.parent.push_back(static_cast<std::ptrdiff_t>(k));
      sb.via.push_back(i);
      sb.tree_edge[k][i] = true;
    }
  }
  if (vecs.size() != d) throw InternalInvariantViolation("spin basis: generators do not span the module");
  sb.basis = Matrix(d, d);
  for (std::size_t k = 0; k < d; ++k) {
    for (std::size_t r = 0; r < d; ++r) sb.basis(r, k) = vecs[k](r, 0);
  }
  return sb;
}

// Residues of an endomorphism basis, keeping an independent subset.
struct ResidueAlgebra {
  std::vector<std::size_t> index;  // positions in the O-basis
  std::vector<Matrix> basis;       // residues over k
  Matrix flat;                     // columns flatten(basis[i])
};

ResidueAlgebra residue_algebra(const Ring& R, const std::vector<Matrix>& endo) {
  ResidueAlgebra out;
  if (endo.empty()) return out;
  const std::size_t n2 = endo[0].rows() * endo[0].cols();
  Matrix all(n2, endo.size());
  for (std::size_t i = 0; i < endo.size(); ++i) {
    Matrix f = flatten(endo[i]);
    for (std::size_t r = 0; r < n2; ++r) all(r, i) = f(r, 0);
  }
  out.index = linalg::independent_columns(R, all);
  out.flat = linalg::residue(R, linalg::columns(all, out.index));
  for (auto i : out.index) out.basis.push_back(linalg::residue(R, endo[i]));
  return out;
}

Matrix scalar_shift(const Ring& k, const Matrix& A, std::uint64_t lambda) {
  Matrix B = A;
  for (std::size_t i = 0; i < A.rows(); ++i) B(i, i) = k.sub(B(i, i), k.from_int(static_cast<std::int64_t>(lambda)));
  return B;
}

// Single eigenvalue of A over k when (A - lambda)^d = 0 for some lambda.
std::optional<std::uint64_t> single_eigenvalue(const Ring& k, const Matrix& A) {
  for (std::uint64_t lambda = 0; lambda < static_cast<std::uint64_t>(k.p()); ++lambda) {
    if (linalg::is_zero(k, linalg::pow(k, scalar_shift(k, A, lambda), A.rows()))) return lambda;
  }
  return std::nullopt;
}

// Every basis element is a scalar plus a nilpotent, and the nilpotent parts
// generate a nilpotent algebra: then the algebra is local.
bool is_local_basis(const Ring& k, const std::vector<Matrix>& ebar) {
  if (ebar.empty()) return true;
  const std::size_t d = ebar[0].rows();
  std::vector<Matrix> nil;
  for (const auto& b : ebar) {
    auto lambda = single_eigenvalue(k, b);
    if (!lambda) return false;
    Matrix n = scalar_shift(k, b, *lambda);
    if (!linalg::is_zero(k, n)) nil.push_back(std::move(n));
  }
  Matrix V = linalg::identity(k, d);
  for (std::size_t step = 0; step <= d; ++step) {
    if (V.cols() == 0) return true;
    Matrix W(d, 0);
    for (const auto& n : nil) W = linalg::hconcat(W, linalg::mul(k, n, V));
    V = linalg::columns(W, linalg::independent_columns(k, W));
  }
  return V.cols() == 0;
}

// Projection onto the generalized kernel of T along its Fitting image, when
// both are nonzero.
std::optional<Matrix> fitting_idempotent(const Ring& k, const Matrix& T) {
  const std::size_t d = T.rows();
  Matrix Td = linalg::pow(k, T, d);
  Matrix ker = linalg::kernel(k, Td);
  if (ker.cols() == 0 || ker.cols() == d) return std::nullopt;
  Matrix img = linalg::columns(Td, linalg::independent_columns(k, Td));
  Matrix B = linalg::hconcat(img, ker);
  Matrix D(d, d);
  for (std::size_t i = img.cols(); i < d; ++i) D(i, i) = k.one();
  return linalg::mul(k, B, linalg::mul(k, D, linalg::inverse(k, B)));
}

struct Leaf {
  RPModule module;
  Matrix basis;  // columns in the coordinates of the input module
};

// Refines a lifted idempotent by e <- 3e^2 - 2e^3 until exact.
Matrix refine_idempotent(const Ring& R, Matrix e) {
  const Element three = R.from_int(3), two = R.from_int(2);
  for (int iter = 0; iter < 40; ++iter) {
    Matrix e2 = linalg::mul(R, e, e);
    if (e2 == e) return e;
    Matrix e3 = linalg::mul(R, e2, e);
    e = linalg::sub(R, linalg::scale(R, three, e2), linalg::scale(R, two, e3));
  }
  throw PrecisionFailure("idempotent refinement did not converge");
}

RPModule block_module(const RPModule& M, const std::vector<Matrix>& conj, std::size_t first, std::size_t count) {
  std::vector<Matrix> action;
  for (const auto& A : conj) action.push_back(linalg::column_range(linalg::row_range(A, first, count), first, count));
  return RPModule(M.ring(), M.group(), count, std::move(action), false);
}

void split_recursive(const RPModule& C, const Matrix& basis, std::mt19937_64& rng, std::vector<Leaf>& leaves) {
  const std::size_t d = C.dim();
  if (d == 0) return;
  if (d == 1) {
    leaves.push_back({C, basis});
    return;
  }
  const Ring& R = *C.ring();
  RingPtr kp = R.residue_field();
  const Ring& k = *kp;
  const auto endo = hom_basis(C, C);
  const auto alg = residue_algebra(R, endo);

  std::optional<Matrix> ebar;
  auto try_element = [&](const Matrix& theta) {
    for (std::uint64_t lambda = 0; lambda < static_cast<std::uint64_t>(k.p()) && !ebar; ++lambda) {
      ebar = fitting_idempotent(k, scalar_shift(k, theta, lambda));
    }
  };
  for (const auto& b : alg.basis) {
    if (ebar) break;
    try_element(b);
  }
  if (!ebar && is_local_basis(k, alg.basis)) {
    leaves.push_back({C, basis});
    return;
  }
  std::uniform_int_distribution<std::uint64_t> coeff(0, static_cast<std::uint64_t>(k.p()) - 1);
  for (int attempt = 0; attempt < 64 && !ebar; ++attempt) {
    Matrix theta(d, d);
    for (const auto& b : alg.basis) theta = linalg::add(k, theta, linalg::scale(k, k.from_int(static_cast<std::int64_t>(coeff(rng))), b));
    try_element(theta);
  }
  if (!ebar) {
    throw CertificationFailed("decompose: endomorphism algebra of a " + std::to_string(d) +
                              "-dimensional summand is neither local nor split by any tried element");
  }
  auto coords = linalg::solve(k, alg.flat, flatten(*ebar));
  if (!coords) throw InternalInvariantViolation("decompose: idempotent outside the endomorphism algebra");
  Matrix e(d, d);
  for (std::size_t i = 0; i < alg.index.size(); ++i) {
    e = linalg::add(R, e, linalg::scale(R, R.from_int(static_cast<std::int64_t>((*coords)(i, 0).c[0])), endo[alg.index[i]]));
  }
  e = refine_idempotent(R, std::move(e));
  Matrix f = linalg::sub(R, linalg::identity(R, d), e);
  Matrix im_e = linalg::columns(e, linalg::independent_columns(R, e));
  Matrix im_f = linalg::columns(f, linalg::independent_columns(R, f));
  Matrix B = linalg::hconcat(im_e, im_f);
  if (B.cols() != d || !linalg::is_invertible(R, B)) throw PrecisionFailure("decompose: idempotent images do not span");
  Matrix Bi = linalg::inverse(R, B);
  std::vector<Matrix> conj;
  const std::size_t r = im_e.cols();
  for (const auto& A : C.action()) {
    Matrix Ac = linalg::mul(R, Bi, linalg::mul(R, A, B));
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t j = 0; j < d; ++j) {
        if ((i < r) != (j < r) && !R.is_zero(Ac(i, j))) throw CertificationFailed("decompose: split is not block diagonal");
      }
    }
    conj.push_back(std::move(Ac));
  }
  Matrix nb = linalg::mul(R, basis, B);
  split_recursive(block_module(C, conj, 0, r), linalg::column_range(nb, 0, r), rng, leaves);
  split_recursive(block_module(C, conj, r, d - r), linalg::column_range(nb, r, d - r), rng, leaves);
}

std::vector<Leaf> decompose_leaves(const RPModule& M, std::uint64_t seed) {
  std::vector<Leaf> leaves;
  if (M.dim() == 0) return leaves;
  FreeSplitting fs = strip_free(M);
  const std::size_t n = M.group()->order();
  if (fs.free_rank > 0) {
    RPModule reg = regular_module(M.ring(), M.group());
    for (std::size_t j = 0; j < fs.free_rank; ++j) leaves.push_back({reg, linalg::column_range(fs.basis_change, j * n, n)});
  }
  std::mt19937_64 rng(seed);
  const std::size_t off = fs.free_rank * n;
  split_recursive(fs.complement, linalg::column_range(fs.basis_change, off, M.dim() - off), rng, leaves);
  return leaves;
}

// For indecomposable X and Y: an isomorphism exists iff some Hom basis
// element is invertible, since the non-isomorphisms form a proper subspace.
std::optional<Matrix> indecomposable_isomorphism(const RPModule& X, const RPModule& Y) {
  if (X.dim() != Y.dim()) return std::nullopt;
  for (auto& T : hom_basis(X, Y)) {
    if (linalg::is_invertible(*X.ring(), T)) return T;
  }
  return std::nullopt;
}

Matrix place_block(std::size_t rows, std::size_t cols, std::size_t r0, std::size_t c0, const Matrix& B, Matrix into) {
  if (into.rows() != rows || into.cols() != cols) into = Matrix(rows, cols);
  for (std::size_t i = 0; i < B.rows(); ++i) {
    for (std::size_t j = 0; j < B.cols(); ++j) into(r0 + i, c0 + j) = B(i, j);
  }
  return into;
}

}  // namespace

std::vector<Matrix> hom_basis(const RPModule& M, const RPModule& N) {
  require_compatible(M, N, "hom_basis");
  const Ring& R = *M.ring();
  const std::size_t dm = M.dim(), dn = N.dim();
  if (dm == 0 || dn == 0) return {};
  const SpinBasis sb = spin_basis(M);
  const std::size_t u = sb.tops * dn;
  std::vector<Matrix> W(dm);
  for (std::size_t k = 0; k < dm; ++k) {
    if (sb.parent[k] < 0) {
      W[k] = Matrix(dn, u);
      for (std::size_t r = 0; r < dn; ++r) W[k](r, sb.via[k] * dn + r) = R.one();
    } else {
      W[k] = linalg::mul(R, N.action()[sb.via[k]], W[static_cast<std::size_t>(sb.parent[k])]);
    }
  }
  const Matrix Binv = linalg::inverse(R, sb.basis);
  std::vector<Matrix> blocks;
  std::size_t rows = 0;
  for (std::size_t k = 0; k < dm; ++k) {
    for (std::size_t i = 0; i < M.action().size(); ++i) {
      if (sb.tree_edge[k][i]) continue;
      Matrix c = linalg::mul(R, Binv, linalg::mul(R, M.action()[i], column(sb.basis, k)));
      Matrix E = linalg::scale(R, R.from_int(-1), linalg::mul(R, N.action()[i], W[k]));
      for (std::size_t kk = 0; kk < dm; ++kk) {
        if (R.is_zero(c(kk, 0))) continue;
        E = linalg::add(R, E, linalg::scale(R, c(kk, 0), W[kk]));
      }
      rows += dn;
      blocks.push_back(std::move(E));
    }
  }
  Matrix system(rows, u);
  std::size_t r0 = 0;
  for (const auto& E : blocks) {
    system = place_block(rows, u, r0, 0, E, std::move(system));
    r0 += E.rows();
  }
  Matrix K = rows == 0 ? linalg::identity(R, u) : linalg::kernel(R, system);
  std::vector<Matrix> out;
  for (std::size_t j = 0; j < K.cols(); ++j) {
    Matrix w = column(K, j);
    Matrix Y(dn, dm);
    for (std::size_t k = 0; k < dm; ++k) Y = place_block(dn, dm, 0, k, linalg::mul(R, W[k], w), std::move(Y));
    out.push_back(linalg::mul(R, Y, Binv));
  }
  return out;
}

FreeSplitting strip_free(const RPModule& M) {
  const Ring& R = *M.ring();
  const std::size_t d = M.dim();
  const PGroup& P = *M.group();
  const std::size_t n = P.order();
  FreeSplitting out;
  out.complement = M;
  out.basis_change = linalg::identity(R, d);
  if (d == 0) return out;
  const auto mats = M.element_matrices();
  Matrix norm(d, d);
  for (const auto& A : mats) norm = linalg::add(R, norm, A);
  const auto gens = linalg::independent_columns(R, norm);
  const std::size_t r = gens.size();
  if (r == 0) return out;

  Matrix F(d, r * n);
  for (std::size_t j = 0; j < r; ++j) {
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t i = 0; i < d; ++i) F(i, j * n + x) = mats[x](i, gens[j]);
    }
  }
  // Lambda: r x d with Lambda * norm_cols = I, supported on r independent rows.
  Matrix norm_cols = linalg::columns(norm, gens);
  const auto rows = linalg::independent_columns(R, linalg::transpose(norm_cols));
  Matrix S(r, r);
  for (std::size_t a = 0; a < r; ++a) {
    for (std::size_t b = 0; b < r; ++b) S(a, b) = norm_cols(rows[a], b);
  }
  const Matrix Si = linalg::inverse(R, S);
  Matrix Lambda(r, d);
  for (std::size_t a = 0; a < r; ++a) {
    for (std::size_t b = 0; b < r; ++b) Lambda(a, rows[b]) = Si(a, b);
  }
  Matrix rho(r * n, d);
  for (std::size_t x = 0; x < n; ++x) {
    const Matrix LA = linalg::mul(R, Lambda, mats[P.inverse(x)]);
    for (std::size_t j = 0; j < r; ++j) {
      for (std::size_t c = 0; c < d; ++c) rho(j * n + x, c) = LA(j, c);
    }
  }
  const auto K = linalg::surjection_kernel(R, rho);
  std::vector<Matrix> action;
  for (const auto& A : M.action()) action.push_back(linalg::kernel_coordinates(K, linalg::mul(R, A, K.basis)));
  out.free_rank = r;
  out.complement = RPModule(M.ring(), M.group(), K.basis.cols(), std::move(action), false);
  out.basis_change = linalg::hconcat(F, K.basis);
  return out;
}

Decomposition decompose(const RPModule& M, std::uint64_t seed) {
  Decomposition dec;
  dec.basis_change = Matrix(M.dim(), 0);
  auto leaves = decompose_leaves(M, seed);
  std::vector<std::vector<std::size_t>> members;
  for (std::size_t i = 0; i < leaves.size(); ++i) {
    std::size_t cls = dec.summands.size();
    for (std::size_t s = 0; s < dec.summands.size(); ++s) {
      if (indecomposable_isomorphism(dec.summands[s].module, leaves[i].module)) {
        cls = s;
        break;
      }
    }
    if (cls == dec.summands.size()) {
      dec.summands.push_back({leaves[i].module, 0});
      members.emplace_back();
    }
    ++dec.summands[cls].multiplicity;
    members[cls].push_back(i);
  }
  for (std::size_t s = 0; s < members.size(); ++s) {
    for (auto i : members[s]) {
      dec.basis_change = linalg::hconcat(dec.basis_change, leaves[i].basis);
      dec.block_summand.push_back(s);
    }
  }
  return dec;
}

std::optional<Matrix> find_isomorphism(const RPModule& M, const RPModule& N, std::uint64_t seed) {
  require_compatible(M, N, "is_isomorphic");
  const Ring& R = *M.ring();
  const std::size_t d = M.dim();
  if (d != N.dim()) return std::nullopt;
  if (d == 0) return Matrix(0, 0);
  FreeSplitting fm = strip_free(M);
  FreeSplitting fn = strip_free(N);
  if (fm.free_rank != fn.free_rank) return std::nullopt;
  const std::size_t off = fm.free_rank * M.group()->order();
  const std::size_t dc = d - off;

  auto assemble = [&](const Matrix& Tc) {
    Matrix D = linalg::identity(R, d);
    D = place_block(d, d, off, off, Tc, std::move(D));
    return linalg::mul(R, fn.basis_change, linalg::mul(R, D, linalg::inverse(R, fm.basis_change)));
  };
  if (dc == 0) return assemble(Matrix(0, 0));

  const auto H = hom_basis(fm.complement, fn.complement);
  if (H.empty()) return std::nullopt;
  for (const auto& T : H) {
    if (linalg::is_invertible(R, T)) return assemble(T);
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint64_t> coeff(0, R.modulus() - 1);
  for (int attempt = 0; attempt < 64; ++attempt) {
    Matrix T(dc, dc);
    for (const auto& h : H) T = linalg::add(R, T, linalg::scale(R, R.from_int(static_cast<std::int64_t>(coeff(rng))), h));
    if (linalg::is_invertible(R, T)) return assemble(T);
  }

  // Deterministic fallback: match indecomposable summands.
  auto lm = decompose_leaves(fm.complement, seed);
  auto ln = decompose_leaves(fn.complement, seed);
  if (lm.size() != ln.size()) return std::nullopt;
  Matrix BM(dc, 0), BN(dc, 0);
  Matrix D(dc, dc);
  std::vector<bool> used(ln.size(), false);
  std::vector<std::size_t> offset_n(ln.size());
  std::size_t acc = 0;
  for (std::size_t j = 0; j < ln.size(); ++j) {
    offset_n[j] = acc;
    acc += ln[j].module.dim();
    BN = linalg::hconcat(BN, ln[j].basis);
  }
  std::size_t om = 0;
  for (const auto& a : lm) {
    bool matched = false;
    for (std::size_t j = 0; j < ln.size() && !matched; ++j) {
      if (used[j]) continue;
      auto f = indecomposable_isomorphism(a.module, ln[j].module);
      if (!f) continue;
      used[j] = true;
      matched = true;
      D = place_block(dc, dc, offset_n[j], om, *f, std::move(D));
    }
    if (!matched) return std::nullopt;
    BM = linalg::hconcat(BM, a.basis);
    om += a.module.dim();
  }
  return assemble(linalg::mul(R, BN, linalg::mul(R, D, linalg::inverse(R, BM))));
}

bool is_isomorphic(const RPModule& M, const RPModule& N, std::uint64_t seed) {
  return find_isomorphism(M, N, seed).has_value();
}

bool is_relatively_projective(const RPModule& M, const SubgroupClass& Q) {
  const Ring& R = *M.ring();
  const PGroup& P = *M.group();
  const std::size_t d = M.dim();
  if (d == 0 || Q.order() == P.order()) return true;
  const RPModule res = restrict(M, Q);
  const auto endo = hom_basis(res, res);
  const CosetAction cosets = P.coset_action(Q);
  std::vector<Matrix> reps, reps_inv;
  for (auto x : cosets.representatives) {
    reps.push_back(M.element_matrix(x));
    reps_inv.push_back(M.element_matrix(P.inverse(x)));
  }
  Matrix system(d * d, endo.size());
  for (std::size_t i = 0; i < endo.size(); ++i) {
    Matrix tr(d, d);
    for (std::size_t c = 0; c < reps.size(); ++c) tr = linalg::add(R, tr, linalg::mul(R, reps[c], linalg::mul(R, endo[i], reps_inv[c])));
    system = place_block(d * d, endo.size(), 0, i, flatten(tr), std::move(system));
  }
  return linalg::solve(R, system, flatten(linalg::identity(R, d))).has_value();
}

const SubgroupClass& vertex(const RPModule& M, std::uint64_t seed) {
  auto leaves = decompose_leaves(M, seed);
  if (leaves.size() != 1) throw NotIndecomposable("vertex: module has " + std::to_string(leaves.size()) + " summands");
  for (const auto& Q : M.group()->subgroup_classes()) {
    if (is_relatively_projective(M, Q)) return Q;
  }
  throw InternalInvariantViolation("vertex: module is not relatively projective to P");
}

bool has_full_vertex(const RPModule& M) {
  // Green: the dimension of an indecomposable is divisible by |P : vertex|.
  if (M.dim() % static_cast<std::size_t>(M.group()->p()) != 0) return true;
  for (const auto* Q : M.group()->maximal_classes()) {
    if (is_relatively_projective(M, *Q)) return false;
  }
  return true;
}

Cap cap(const RPModule& M, std::uint64_t seed) {
  const auto dec = decompose(M, seed);
  std::optional<Cap> found;
  for (const auto& s : dec.summands) {
    if (s.module.dim() == M.group()->order() && strip_free(s.module).free_rank == 1) continue;
    if (!has_full_vertex(s.module)) continue;
    if (found) throw NotCapped("cap: two non-isomorphic summands with vertex " + M.group()->name());
    found = Cap{s.module, s.multiplicity};
  }
  if (!found) throw NotCapped("cap: no summand has vertex " + M.group()->name());
  return *found;
}

bool is_permutation_module(const RPModule& M, std::uint64_t seed) {
  const auto dec = decompose(M, seed);
  const PGroup& P = *M.group();
  for (const auto& s : dec.summands) {
    bool ok = false;
    for (const auto& Q : P.subgroup_classes()) {
      if (Q.index_in_P != s.module.dim()) continue;
      if (indecomposable_isomorphism(s.module, permutation_module(M.ring(), M.group(), Q))) {
        ok = true;
        break;
      }
    }
    if (!ok) return false;
  }
  return true;
}

bool is_endo_permutation(const RPModule& M, std::uint64_t seed) {
  return is_permutation_module(tensor(M, dual(M)), seed);
}

bool is_strongly_capped(const RPModule& M, std::uint64_t seed) {
  try {
    return cap(M, seed).multiplicity == 1;
  } catch (const NotCapped&) {
    return false;
  }
}

bool is_endotrivial(const RPModule& M, std::uint64_t seed) {
  const FreeSplitting fs = strip_free(tensor(M, dual(M)));
  return is_isomorphic(fs.complement, trivial_module(M.ring(), M.group()), seed);
}

}  // namespace dadelab
