#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dadelab/rpmod.hpp"

namespace dadelab {

/// A class in D_R(P), represented by its cap.
struct DadeElement {
  RPModule cap;

  const RingPtr& ring() const { return cap.ring(); }
  const GroupPtr& group() const { return cap.group(); }
};

/// Checks that M is endo-permutation and strongly capped.
DadeElement element_of(const RPModule& M, std::uint64_t seed = 42);
/// Class of the cap of M without re-checking the endo-permutation property.
DadeElement element_of_unchecked(const RPModule& M, std::uint64_t seed = 42);
DadeElement identity_element(RingPtr R, GroupPtr P);

DadeElement mul(const DadeElement& a, const DadeElement& b, std::uint64_t seed = 42);
DadeElement inverse(const DadeElement& a);
DadeElement power(const DadeElement& a, int e, std::uint64_t seed = 42);
bool is_identity(const DadeElement& a);
bool same_class(const DadeElement& a, const DadeElement& b, std::uint64_t seed = 42);

inline constexpr std::size_t kDefaultOrderBound = 8;

struct OrderResult {
  std::optional<std::size_t> order;  // empty when unresolved
  std::size_t bound = 0;

  bool resolved() const { return order.has_value(); }
  std::string to_string() const;
};
OrderResult order(const DadeElement& a, std::size_t bound = kDefaultOrderBound, std::uint64_t seed = 42);

/// X(P): the linear characters P -> <zeta>.
struct CharacterGroup {
  RingPtr ring;
  GroupPtr group;
  std::vector<LinearCharacter> elements;
  /// table[i][j] = index of elements[i] * elements[j].
  std::vector<std::vector<std::size_t>> table;

  std::size_t size() const { return elements.size(); }
};
CharacterGroup character_group(GroupPtr P, RingPtr O);

/// pi_p: class of the cap of the reduction.
DadeElement reduce_class(const DadeElement& a, std::uint64_t seed = 42);

/// Phi_M: the lift L0 of M twisted to have trivial determinant.
RPModule determinant_one_lift(const RPModule& M, const RPModule& L0, std::uint64_t seed = 42);

/// A configured generator of D_k(P) with its native lattice lift.
struct Generator {
  std::string name;
  RPModule k_module;
  RPModule lift;
};
/// Omega^1 for every group; relative syzygies over proper nontrivial
/// subgroups for C2xC2, C2xC4 and C3xC3; over maximal subgroups for D8, Q8.
std::vector<Generator> configured_generators(GroupPtr P, int N);

/// A word prod g_i^{e_i} in the configured generators.
using RelationWord = std::vector<std::pair<std::size_t, int>>;

struct SectionEntry {
  std::string generator;
  std::string check;  // "reduction", "order" or "relation"
  bool passed = false;
  std::string detail;
};

struct SectionReport {
  std::vector<SectionEntry> entries;
  std::string limitation;

  bool all_passed() const;
};

/// Verifies reduce_class(Phi-class) = generator, order preservation when the
/// k-order resolves, and that relations holding over k hold for the lifts.
SectionReport section_on_generators(const std::vector<Generator>& generators, const std::vector<RelationWord>& relations,
                                    std::size_t bound = kDefaultOrderBound, std::uint64_t seed = 42);

struct PhiChecks {
  bool dual = false;
  bool tensor = false;
  bool permutation = false;
};
PhiChecks phi_multiplicativity_check(const RPModule& M, const RPModule& LM, const RPModule& N, const RPModule& LN,
                                     std::uint64_t seed = 42);

}  // namespace dadelab
