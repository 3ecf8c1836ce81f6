#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "dadelab/rpmod.hpp"

namespace dadelab {

/// Basis of Hom_{RP}(M, N) as dim N x dim M matrices.
std::vector<Matrix> hom_basis(const RPModule& M, const RPModule& N);

/// M = (RP)^r (+) complement.
struct FreeSplitting {
  std::size_t free_rank = 0;
  RPModule complement;
  /// Columns: basis of the free part (r blocks of |P| columns, element order),
  /// then the complement basis.
  Matrix basis_change;
};
FreeSplitting strip_free(const RPModule& M);

struct Summand {
  RPModule module;
  std::size_t multiplicity = 1;
};

struct Decomposition {
  std::vector<Summand> summands;
  /// Columns grouped by summand then by copy, each block spanning one copy.
  Matrix basis_change;
  /// For each block of columns in basis_change: index into summands.
  std::vector<std::size_t> block_summand;
};

Decomposition decompose(const RPModule& M, std::uint64_t seed = 42);

/// Witness T with T A^M_g = A^N_g T, or nullopt when M and N are not
/// isomorphic.
std::optional<Matrix> find_isomorphism(const RPModule& M, const RPModule& N, std::uint64_t seed = 42);
bool is_isomorphic(const RPModule& M, const RPModule& N, std::uint64_t seed = 42);

/// Higman's criterion: the identity of End(M) is a relative trace from Q.
bool is_relatively_projective(const RPModule& M, const SubgroupClass& Q);
/// Vertex of an indecomposable module. Throws NotIndecomposable otherwise.
const SubgroupClass& vertex(const RPModule& M, std::uint64_t seed = 42);
/// True when the indecomposable M is not relatively projective to any
/// maximal subgroup.
bool has_full_vertex(const RPModule& M);

struct Cap {
  RPModule module;
  std::size_t multiplicity = 0;
};
/// Throws NotCapped when no summand has vertex P, or when two
/// non-isomorphic ones do.
Cap cap(const RPModule& M, std::uint64_t seed = 42);

bool is_permutation_module(const RPModule& M, std::uint64_t seed = 42);
bool is_endo_permutation(const RPModule& M, std::uint64_t seed = 42);
bool is_strongly_capped(const RPModule& M, std::uint64_t seed = 42);
bool is_endotrivial(const RPModule& M, std::uint64_t seed = 42);

}  // namespace dadelab
