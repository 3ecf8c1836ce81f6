#include "dadelab/heller.hpp"

#include <cstdlib>
#include <iostream>

#include "dadelab/structure.hpp"

namespace dadelab {

namespace {

// Action on the kernel of a surjection from a module with known action.
RPModule kernel_module(const RPModule& source, const Matrix& S) {
  const Ring& R = *source.ring();
  const auto K = linalg::surjection_kernel(R, S);
  std::vector<Matrix> action;
  for (const auto& A : source.action()) action.push_back(linalg::kernel_coordinates(K, linalg::mul(R, A, K.basis)));
  return RPModule(source.ring(), source.group(), K.basis.cols(), std::move(action), false);
}

}  // namespace

ProjectiveCover projective_cover(const RPModule& M) {
  const Ring& R = *M.ring();
  const std::size_t d = M.dim();
  const std::size_t n = M.group()->order();
  if (d == 0) throw InvalidArgument("projective_cover: zero module");
  Matrix rad(d, 0);
  for (const auto& A : M.action()) rad = linalg::hconcat(rad, linalg::sub(R, A, linalg::identity(R, d)));
  const std::size_t rad_cols = rad.cols();
  std::vector<std::size_t> tops;
  for (auto c : linalg::independent_columns(R, linalg::hconcat(rad, linalg::identity(R, d)))) {
    if (c >= rad_cols) tops.push_back(c - rad_cols);
  }
  const auto mats = M.element_matrices();
  ProjectiveCover pc;
  pc.rank = tops.size();
  pc.surjection = Matrix(d, pc.rank * n);
  for (std::size_t j = 0; j < pc.rank; ++j) {
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t i = 0; i < d; ++i) pc.surjection(i, j * n + x) = mats[x](i, tops[j]);
    }
  }
  RPModule free = regular_module(M.ring(), M.group());
  for (std::size_t j = 1; j < pc.rank; ++j) free = direct_sum(free, regular_module(M.ring(), M.group()));
  const auto K = linalg::surjection_kernel(R, pc.surjection);
  if (K.basis.cols() + d != pc.rank * n) throw PrecisionFailure("projective_cover: kernel rank mismatch");
  pc.kernel_basis = K.basis;
  pc.kernel = kernel_module(free, pc.surjection);
  return pc;
}

RPModule syzygy(const RPModule& M) { return projective_cover(M).kernel; }

RPModule cosyzygy(const RPModule& M) { return dual(syzygy(dual(M))); }

RPModule omega_power(RingPtr R, GroupPtr P, int m, int bound) {
  if (std::abs(m) > bound) {
    throw BoundExceeded("omega_power: |m| = " + std::to_string(std::abs(m)) + " exceeds bound " + std::to_string(bound));
  }
  RPModule M = trivial_module(R, P);
  for (int i = 0; i < std::abs(m); ++i) {
    if (M.dim() == 0) break;
    M = m > 0 ? syzygy(M) : cosyzygy(M);
    FreeSplitting fs = strip_free(M);
    if (fs.free_rank > 0) {
      std::cerr << "warning: omega_power removed " << fs.free_rank << " free summand(s) at step " << i + 1 << "\n";
      M = fs.complement;
    }
  }
  return M;
}

RPModule relative_syzygy(RingPtr R, GroupPtr P, const SubgroupClass& Q) {
  RPModule perm = permutation_module(R, P, Q);
  Matrix aug(1, perm.dim());
  for (std::size_t j = 0; j < perm.dim(); ++j) aug(0, j) = R->one();
  return kernel_module(perm, aug);
}

}  // namespace dadelab
