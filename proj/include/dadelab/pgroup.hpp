#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "dadelab/errors.hpp"

namespace dadelab {

class PGroup;
using GroupPtr = std::shared_ptr<const PGroup>;

/// A conjugacy class of subgroups of a p-group.
struct SubgroupClass {
  /// Lexicographically smallest member, as sorted element indices.
  std::vector<std::size_t> representative;
  /// All distinct conjugates (including the representative), sorted.
  std::vector<std::vector<std::size_t>> conjugates;
  std::size_t index_in_P = 1;
  /// Generating set of the representative; each is also an element of P,
  /// so its word in P's generators is P.word(g).
  std::vector<std::size_t> generators;
  /// Position of this class in PGroup::subgroup_classes().
  std::size_t id = 0;

  std::size_t order() const { return representative.size(); }
  bool contains(std::size_t g) const;
};

/// Left cosets xQ of a subgroup and the left-multiplication action of P's
/// generators on them.
struct CosetAction {
  std::vector<std::vector<std::size_t>> cosets;  // sorted by smallest element
  std::vector<std::size_t> representatives;      // smallest element of each coset
  std::vector<std::size_t> coset_of;             // element -> coset index
  std::vector<std::vector<std::size_t>> generator_perms;

  std::size_t size() const { return cosets.size(); }
};

/// Relation g_i * x = y checked by module validation: the word of y must act
/// like generator i followed by the word of x.
struct CayleyRelation {
  std::size_t generator;
  std::size_t element;
  std::size_t product;
};

/// A finite p-group stored by its full multiplication table.
///
/// Element 0 is the identity. Every element x carries a word w(x) in the
/// generators with x = g_{w[0]} * g_{w[1]} * ... found by breadth-first
/// search, so representation matrices compose as A(x) = A(g_{w[0]}) * ...
class PGroup {
 public:
  /// Builds and validates a group from its multiplication table.
  static GroupPtr from_table(std::string name, int p, std::vector<std::size_t> table,
                             std::vector<std::size_t> generators);

  const std::string& name() const { return name_; }
  int p() const { return p_; }
  std::size_t order() const { return order_; }
  std::size_t exponent() const { return exponent_; }
  /// n with exponent() == p^n.
  int exponent_log() const { return exponent_log_; }

  std::size_t mul(std::size_t a, std::size_t b) const { return table_[a * order_ + b]; }
  std::size_t inverse(std::size_t a) const { return inverse_[a]; }
  std::size_t power(std::size_t a, std::size_t k) const;
  std::size_t element_order(std::size_t a) const { return element_orders_[a]; }
  const std::vector<std::size_t>& generators() const { return generators_; }
  const std::vector<std::size_t>& word(std::size_t x) const { return words_[x]; }
  const std::vector<CayleyRelation>& relations() const { return relations_; }
  bool is_abelian() const;
  bool is_cyclic() const { return exponent_ == order_; }

  /// Smallest subgroup containing the given elements.
  std::vector<std::size_t> closure(const std::vector<std::size_t>& elements) const;
  std::vector<std::size_t> commutator_subgroup() const;

  /// All subgroup classes, sorted by order then representative.
  const std::vector<SubgroupClass>& subgroup_classes() const { return classes_; }
  /// Class containing the given subgroup (any conjugate).
  const SubgroupClass& class_of(const std::vector<std::size_t>& subgroup) const;
  /// The class of the cyclic subgroup generated by g.
  const SubgroupClass& cyclic_subgroup(std::size_t g) const;
  const SubgroupClass& whole_group_class() const { return classes_.back(); }
  const SubgroupClass& trivial_class() const { return classes_.front(); }
  /// Classes of maximal subgroups (index p).
  std::vector<const SubgroupClass*> maximal_classes() const;

  CosetAction coset_action(const SubgroupClass& Q) const;

  /// The representative of Q as a group in its own right, generated by
  /// Q.generators. embedding()[i] is the element of P for element i of Q.
  struct Subgroup {
    GroupPtr group;
    std::vector<std::size_t> embedding;
  };
  Subgroup subgroup_group(const SubgroupClass& Q) const;

 private:
  PGroup() = default;
  void validate_and_index();
  void enumerate_subgroups();

  std::string name_;
  int p_ = 0;
  std::size_t order_ = 0;
  std::size_t exponent_ = 1;
  int exponent_log_ = 0;
  std::vector<std::size_t> table_;
  std::vector<std::size_t> inverse_;
  std::vector<std::size_t> element_orders_;
  std::vector<std::size_t> generators_;
  std::vector<std::vector<std::size_t>> words_;
  std::vector<CayleyRelation> relations_;
  std::vector<SubgroupClass> classes_;
};

namespace catalog {

GroupPtr cyclic(std::size_t n);
/// Dihedral group of order n (n = 2^a, a >= 2).
GroupPtr dihedral(std::size_t n);
/// Generalised quaternion group of order n (n = 2^a, a >= 3).
GroupPtr quaternion(std::size_t n);
/// Semi-dihedral group of order n (n = 2^a, a >= 4).
GroupPtr semidihedral(std::size_t n);
GroupPtr direct_product(const GroupPtr& a, const GroupPtr& b);
GroupPtr elementary_abelian(int p, int rank);

/// build_group from a catalog spec string such as "C4", "D8", "Q8",
/// "C2xC4" or "C3xC3".
GroupPtr build_group(const std::string& spec);

/// The catalog groups used by the verification suite.
const std::vector<std::string>& standard_specs();

}  // namespace catalog
}  // namespace dadelab
