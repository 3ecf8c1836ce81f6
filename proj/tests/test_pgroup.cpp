#include <algorithm>
#include <array>
#include <map>
#include <set>

#include "doctest.h"
#include "dadelab/pgroup.hpp"

using namespace dadelab;

namespace {

// Unit quaternions +-1, +-i, +-j, +-k as (sign, axis) multiplied by hand.
struct Quat {
  int sign;
  int axis;  // 0 = 1, 1 = i, 2 = j, 3 = k
  bool operator<(const Quat& o) const { return std::tie(sign, axis) < std::tie(o.sign, o.axis); }
  bool operator==(const Quat& o) const = default;
};

Quat qmul(Quat a, Quat b) {
  static const int axis[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static const int sign[4][4] = {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
  return {a.sign * b.sign * sign[a.axis][b.axis], axis[a.axis][b.axis]};
}

// Count subgroups by closing every subset; only for tiny orders.
std::size_t brute_force_subgroup_count(const PGroup& G) {
  const std::size_t n = G.order();
  std::set<std::vector<std::size_t>> subgroups;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (1u << i)) s.push_back(i);
    if (s.empty() || s[0] != 0) continue;
    bool closed = true;
    for (auto a : s)
      for (auto b : s)
        if (!std::binary_search(s.begin(), s.end(), G.mul(a, b))) closed = false;
    if (closed) subgroups.insert(s);
  }
  return subgroups.size();
}

}  // namespace

TEST_CASE("catalog groups") {
  auto c4 = catalog::build_group("C4");
  CHECK(c4->order() == 4);
  CHECK(c4->exponent() == 4);
  CHECK(c4->generators().size() == 1);

  auto q8 = catalog::build_group("Q8");
  CHECK(q8->order() == 8);
  CHECK(q8->exponent() == 4);
  std::size_t involutions = 0;
  for (std::size_t g = 0; g < 8; ++g) involutions += q8->element_order(g) == 2;
  CHECK(involutions == 1);

  auto v4 = catalog::build_group("C2xC2");
  CHECK(v4->order() == 4);
  CHECK(v4->exponent() == 2);

  CHECK(catalog::build_group("C3xC3")->p() == 3);
  CHECK(catalog::build_group("D8")->exponent() == 4);
  CHECK_FALSE(catalog::build_group("D8")->is_abelian());
  CHECK_THROWS_AS(catalog::build_group("C6"), InvalidArgument);
  CHECK_THROWS_AS(catalog::build_group("X4"), InvalidArgument);
  CHECK_THROWS_AS(catalog::build_group("C2xC3"), InvalidArgument);
  CHECK_THROWS_AS(catalog::build_group(""), InvalidArgument);
}

TEST_CASE("Q8 table matches quaternion multiplication") {
  // Closure of {i, j} under hand-written quaternion products.
  std::set<Quat> elems{{1, 0}};
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<Quat> cur(elems.begin(), elems.end());
    for (auto a : cur)
      for (Quat g : {Quat{1, 1}, Quat{1, 2}})
        if (elems.insert(qmul(a, g)).second) grew = true;
  }
  CHECK(elems.size() == 8);
  std::map<std::size_t, int> order_counts;
  for (auto a : elems) {
    Quat x = a;
    std::size_t k = 1;
    while (!(x == Quat{1, 0})) {
      x = qmul(x, a);
      ++k;
    }
    ++order_counts[k];
  }
  auto q8 = catalog::build_group("Q8");
  std::map<std::size_t, int> table_counts;
  for (std::size_t g = 0; g < 8; ++g) ++table_counts[q8->element_order(g)];
  CHECK(order_counts == table_counts);
  CHECK(q8->commutator_subgroup().size() == 2);
}

TEST_CASE("subgroup classes") {
  CHECK(catalog::build_group("C4")->subgroup_classes().size() == 3);
  CHECK(catalog::build_group("C2xC2")->subgroup_classes().size() == 5);
  auto q8 = catalog::build_group("Q8");
  const auto& classes = q8->subgroup_classes();
  REQUIRE(classes.size() == 6);
  std::vector<std::size_t> orders;
  for (const auto& c : classes) orders.push_back(c.order());
  CHECK(orders == std::vector<std::size_t>{1, 2, 4, 4, 4, 8});
  CHECK(catalog::build_group("D8")->subgroup_classes().size() == 8);
}

TEST_CASE("subgroup enumeration agrees with subset closure") {
  for (const auto& spec : catalog::standard_specs()) {
    auto G = catalog::build_group(spec);
    if (G->order() > 16) continue;
    std::size_t total = 0;
    for (const auto& c : G->subgroup_classes()) {
      total += c.conjugates.size();
      CHECK(c.index_in_P * c.order() == G->order());
      CHECK(G->closure(c.generators) == c.representative);
      for (std::size_t i = 1; i < c.conjugates.size(); ++i) CHECK(c.conjugates[0] < c.conjugates[i]);
    }
    CHECK_MESSAGE(total == brute_force_subgroup_count(*G), spec);
    for (std::size_t g = 0; g < G->order(); ++g) {
      CHECK(G->exponent() % G->element_order(g) == 0);
    }
    CHECK(G->order() % G->exponent() == 0);
  }
}

TEST_CASE("cyclic_subgroup") {
  auto c8 = catalog::build_group("C8");
  CHECK(c8->cyclic_subgroup(0).id == c8->trivial_class().id);
  CHECK(c8->cyclic_subgroup(c8->generators()[0]).id == c8->whole_group_class().id);
  auto q8 = catalog::build_group("Q8");
  CHECK(q8->cyclic_subgroup(q8->generators()[0]).order() == 4);
}

TEST_CASE("coset_action") {
  auto c4 = catalog::build_group("C4");
  const auto& cls = c4->subgroup_classes();
  auto act = c4->coset_action(cls[1]);
  CHECK(act.size() == 2);
  CHECK(act.generator_perms[0] == std::vector<std::size_t>{1, 0});
  auto whole = c4->coset_action(c4->whole_group_class());
  CHECK(whole.size() == 1);
  CHECK(whole.generator_perms[0] == std::vector<std::size_t>{0});
  auto regular = c4->coset_action(c4->trivial_class());
  auto perm = regular.generator_perms[0];
  std::size_t x = 0, steps = 0;
  do {
    x = perm[x];
    ++steps;
  } while (x != 0);
  CHECK(steps == 4);
}

TEST_CASE("coset action is a homomorphism on the full table") {
  for (const auto& spec : catalog::standard_specs()) {
    auto G = catalog::build_group(spec);
    for (const auto& Q : G->subgroup_classes()) {
      auto act = G->coset_action(Q);
      for (std::size_t a = 0; a < G->order(); ++a) {
        for (std::size_t b = 0; b < G->order(); ++b) {
          for (std::size_t c = 0; c < act.size(); ++c) {
            auto direct = act.coset_of[G->mul(G->mul(a, b), act.representatives[c])];
            auto composed = act.coset_of[G->mul(a, act.representatives[act.coset_of[G->mul(b, act.representatives[c])]])];
            CHECK(direct == composed);
          }
        }
      }
    }
  }
}

TEST_CASE("words evaluate to their elements") {
  for (const auto& spec : catalog::standard_specs()) {
    auto G = catalog::build_group(spec);
    for (std::size_t x = 0; x < G->order(); ++x) {
      std::size_t v = 0;
      for (auto i : G->word(x)) v = G->mul(v, G->generators()[i]);
      CHECK(v == x);
    }
    for (const auto& Q : G->subgroup_classes()) {
      auto sub = G->subgroup_group(Q);
      CHECK(sub.group->order() == Q.order());
    }
  }
}
