#pragma once

#include "dadelab/rpmod.hpp"

namespace dadelab {

/// Minimal free cover (RP)^r -> M.
struct ProjectiveCover {
  std::size_t rank = 0;
  /// dim M x r|P|; column j|P| + x is the image of x e_j.
  Matrix surjection;
  /// Kernel basis as columns of length r|P|.
  Matrix kernel_basis;
  RPModule kernel;
};

ProjectiveCover projective_cover(const RPModule& M);
RPModule syzygy(const RPModule& M);
RPModule cosyzygy(const RPModule& M);

inline constexpr int kDefaultOmegaBound = 4;

/// Omega^m of the trivial module with free summands removed. Throws
/// BoundExceeded when |m| > bound.
RPModule omega_power(RingPtr R, GroupPtr P, int m, int bound = kDefaultOmegaBound);
/// Kernel of the augmentation R[P/Q] -> R.
RPModule relative_syzygy(RingPtr R, GroupPtr P, const SubgroupClass& Q);

}  // namespace dadelab
