#pragma once

#include <cstdint>
#include <vector>

#include "dadelab/coeffring.hpp"
#include "dadelab/matrix.hpp"
#include "dadelab/pgroup.hpp"

namespace dadelab {

/// Coefficient ring for modules over P: GF(p) when over_O is false, else the
/// truncated DVR with a primitive exp(P)-th root of unity at precision N.
RingPtr coefficient_ring(const PGroup& P, bool over_O, int N);

/// A linear character P -> <zeta>, stored as exponents: generator i acts by
/// zeta^{exponents[i]}.
struct LinearCharacter {
  RingPtr ring;
  GroupPtr group;
  std::vector<std::uint64_t> exponents;

  /// Exponent of the value on an arbitrary element.
  std::uint64_t exponent_at(std::size_t element) const;
  Element value(std::size_t element) const { return ring->zeta_pow(static_cast<std::int64_t>(exponent_at(element))); }
  bool is_trivial() const;

  friend bool operator==(const LinearCharacter& a, const LinearCharacter& b);
};

LinearCharacter trivial_character(RingPtr R, GroupPtr P);
/// Throws ValidationError when the exponents violate a group relation.
LinearCharacter make_character(RingPtr R, GroupPtr P, std::vector<std::uint64_t> exponents);
LinearCharacter operator*(const LinearCharacter& a, const LinearCharacter& b);
LinearCharacter inverse(const LinearCharacter& a);
LinearCharacter power(const LinearCharacter& a, std::int64_t e);

/// A module over RP given by one invertible matrix per generator of P, acting
/// on column vectors.
class RPModule {
 public:
  RPModule() = default;
  /// Validates invertibility and the group relations unless validate is false.
  RPModule(RingPtr ring, GroupPtr group, std::vector<Matrix> action, bool validate = true);
  /// Explicit dimension, needed when the group has no generators.
  RPModule(RingPtr ring, GroupPtr group, std::size_t dim, std::vector<Matrix> action, bool validate = true);

  const RingPtr& ring() const { return ring_; }
  const GroupPtr& group() const { return group_; }
  std::size_t dim() const { return dim_; }
  const std::vector<Matrix>& action() const { return action_; }
  const Matrix& generator_matrix(std::size_t i) const { return action_[i]; }

  /// Matrix of every group element, indexed like the group's elements.
  std::vector<Matrix> element_matrices() const;
  Matrix element_matrix(std::size_t x) const;

  /// Subgroup class ids of the permutation basis, when known.
  const std::vector<std::size_t>& permutation_tags() const { return perm_tags_; }
  void set_permutation_tags(std::vector<std::size_t> tags) { perm_tags_ = std::move(tags); }

  /// Throws ValidationError naming the first violated relation.
  void validate() const;

  friend bool operator==(const RPModule& a, const RPModule& b);

 private:
  void check_shapes() const;

  RingPtr ring_;
  GroupPtr group_;
  std::size_t dim_ = 0;
  std::vector<Matrix> action_;
  std::vector<std::size_t> perm_tags_;
};

RPModule zero_module(RingPtr R, GroupPtr P);
RPModule trivial_module(RingPtr R, GroupPtr P);
RPModule permutation_module(RingPtr R, GroupPtr P, const SubgroupClass& Q);
RPModule regular_module(RingPtr R, GroupPtr P);
/// The one-dimensional lattice on which P acts through chi.
RPModule character_module(const LinearCharacter& chi);

RPModule direct_sum(const RPModule& M, const RPModule& N);
RPModule direct_sum(const std::vector<RPModule>& parts);
RPModule tensor(const RPModule& M, const RPModule& N);
RPModule dual(const RPModule& M);
/// Restriction to the representative of Q, as a module over subgroup_group(Q).
RPModule restrict(const RPModule& M, const SubgroupClass& Q);
/// Same module with the basis changed: action g -> B^{-1} A_g B.
RPModule conjugate(const RPModule& M, const Matrix& B);

RPModule reduce_mod_p(const RPModule& L);
LinearCharacter determinant_character(const RPModule& L);
RPModule twist(const RPModule& L, const LinearCharacter& chi);

}  // namespace dadelab
