#pragma once

#include <cstdint>
#include <vector>

#include "dadelab/rpmod.hpp"

namespace dadelab::oracle {

/// Square matrix over GF(2), entries 0 or 1.
using Mat2 = std::vector<std::vector<int>>;

/// Generator matrices of a module over GF(2).
std::vector<Mat2> to_gf2(const RPModule& M);

/// Block sizes of the nilpotent A - I, largest first.
std::vector<std::size_t> jordan_type(const Mat2& A);

/// Basis of the commutant {X : X A = A X for all A}.
std::vector<Mat2> commutant_basis(const std::vector<Mat2>& action);

/// Splits along nontrivial idempotents of the commutant, found by exhaustive
/// enumeration, until every piece has none. Returns the pieces' actions.
/// Throws InvalidArgument when a commutant of dimension above max_dim shows
/// no idempotent among its first 2^max_dim elements.
std::vector<std::vector<Mat2>> split_by_idempotents(const std::vector<Mat2>& action, std::size_t max_dim = 26);

}  // namespace dadelab::oracle
