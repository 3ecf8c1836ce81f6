#include "dadelab/pgroup.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <map>
#include <set>

namespace dadelab {

namespace {

using Mask = std::uint64_t;

Mask to_mask(const std::vector<std::size_t>& elements) {
  Mask m = 0;
  for (auto e : elements) m |= Mask{1} << e;
  return m;
}

std::vector<std::size_t> from_mask(Mask m) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < 64; ++i) {
    if (m & (Mask{1} << i)) out.push_back(i);
  }
  return out;
}

bool is_power_of(std::size_t v, std::size_t p) {
  if (v == 0) return false;
  while (v % p == 0) v /= p;
  return v == 1;
}

}  // namespace

bool SubgroupClass::contains(std::size_t g) const {
  return std::binary_search(representative.begin(), representative.end(), g);
}

GroupPtr PGroup::from_table(std::string name, int p, std::vector<std::size_t> table,
                            std::vector<std::size_t> generators) {
  std::shared_ptr<PGroup> g(new PGroup());
  g->name_ = std::move(name);
  g->p_ = p;
  g->table_ = std::move(table);
  g->generators_ = std::move(generators);
  g->validate_and_index();
  g->enumerate_subgroups();
  return g;
}

void PGroup::validate_and_index() {
  const std::size_t n2 = table_.size();
  std::size_t n = 0;
  while (n * n < n2) ++n;
  if (n * n != n2 || n == 0) throw InvalidArgument("group " + name_ + ": table is not square");
  if (n > 64) throw InvalidArgument("group " + name_ + ": order above 64 is not supported");
  if (p_ < 2 || !is_power_of(n, static_cast<std::size_t>(p_))) {
    throw InvalidArgument("group " + name_ + ": order " + std::to_string(n) + " is not a power of p");
  }
  order_ = n;
  for (auto v : table_) {
    if (v >= n) throw InvalidArgument("group " + name_ + ": table entry out of range");
  }
  for (std::size_t a = 0; a < n; ++a) {
    if (mul(0, a) != a || mul(a, 0) != a) throw InvalidArgument("group " + name_ + ": element 0 is not the identity");
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t c = 0; c < n; ++c) {
        if (mul(mul(a, b), c) != mul(a, mul(b, c))) throw InvalidArgument("group " + name_ + ": not associative");
      }
    }
  }
  inverse_.assign(n, n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (mul(a, b) == 0) inverse_[a] = b;
    }
    if (inverse_[a] == n || mul(inverse_[a], a) != 0) throw InvalidArgument("group " + name_ + ": missing inverse");
  }
  element_orders_.assign(n, 0);
  exponent_ = 1;
  for (std::size_t a = 0; a < n; ++a) {
    std::size_t k = 1;
    std::size_t x = a;
    while (x != 0) {
      x = mul(x, a);
      ++k;
    }
    element_orders_[a] = k;
    exponent_ = std::max(exponent_, k);
  }
  exponent_log_ = 0;
  for (std::size_t e = exponent_; e > 1; e /= static_cast<std::size_t>(p_)) ++exponent_log_;

  for (auto g : generators_) {
    if (g >= n) throw InvalidArgument("group " + name_ + ": generator out of range");
  }
  // Breadth-first words: y = g_i * x gets word [i] + word(x).
  words_.assign(n, {});
  std::vector<bool> seen(n, false);
  seen[0] = true;
  std::deque<std::size_t> queue{0};
  while (!queue.empty()) {
    std::size_t x = queue.front();
    queue.pop_front();
    for (std::size_t i = 0; i < generators_.size(); ++i) {
      std::size_t y = mul(generators_[i], x);
      if (seen[y]) continue;
      seen[y] = true;
      words_[y].push_back(i);
      words_[y].insert(words_[y].end(), words_[x].begin(), words_[x].end());
      queue.push_back(y);
    }
  }
  if (std::find(seen.begin(), seen.end(), false) != seen.end()) {
    throw InvalidArgument("group " + name_ + ": generators do not generate the group");
  }
  relations_.clear();
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t i = 0; i < generators_.size(); ++i) {
      std::size_t y = mul(generators_[i], x);
      const auto& wy = words_[y];
      bool tree_edge = !wy.empty() && wy[0] == i && wy.size() == words_[x].size() + 1 &&
                       std::equal(words_[x].begin(), words_[x].end(), wy.begin() + 1);
      if (!tree_edge) relations_.push_back({i, x, y});
    }
  }
}

std::size_t PGroup::power(std::size_t a, std::size_t k) const {
  std::size_t x = 0;
  for (std::size_t i = 0; i < k; ++i) x = mul(x, a);
  return x;
}

bool PGroup::is_abelian() const {
  for (std::size_t a = 0; a < order_; ++a) {
    for (std::size_t b = 0; b < order_; ++b) {
      if (mul(a, b) != mul(b, a)) return false;
    }
  }
  return true;
}

std::vector<std::size_t> PGroup::closure(const std::vector<std::size_t>& elements) const {
  Mask m = 1;  // identity
  std::vector<std::size_t> members{0};
  std::deque<std::size_t> queue;
  for (auto e : elements) {
    if (!(m & (Mask{1} << e))) {
      m |= Mask{1} << e;
      members.push_back(e);
      queue.push_back(e);
    }
  }
  // A finite subset closed under products is a subgroup.
  while (!queue.empty()) {
    std::size_t x = queue.front();
    queue.pop_front();
    const std::size_t count = members.size();
    for (std::size_t i = 0; i < count; ++i) {
      for (std::size_t z : {mul(x, members[i]), mul(members[i], x)}) {
        if (!(m & (Mask{1} << z))) {
          m |= Mask{1} << z;
          members.push_back(z);
          queue.push_back(z);
        }
      }
    }
  }
  return from_mask(m);
}

std::vector<std::size_t> PGroup::commutator_subgroup() const {
  std::vector<std::size_t> comms;
  for (std::size_t a = 0; a < order_; ++a) {
    for (std::size_t b = 0; b < order_; ++b) {
      comms.push_back(mul(mul(inverse(a), inverse(b)), mul(a, b)));
    }
  }
  return closure(comms);
}

void PGroup::enumerate_subgroups() {
  std::set<Mask> found;
  for (std::size_t x = 0; x < order_; ++x) found.insert(to_mask(closure({x})));
  // Every subgroup is a join of cyclic subgroups; close under pairwise joins.
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<Mask> current(found.begin(), found.end());
    for (std::size_t i = 0; i < current.size(); ++i) {
      for (std::size_t j = i + 1; j < current.size(); ++j) {
        Mask joined = current[i] | current[j];
        if (found.count(joined)) continue;
        Mask sub = to_mask(closure(from_mask(joined)));
        if (found.insert(sub).second) grew = true;
      }
    }
  }
  std::set<Mask> assigned;
  std::vector<SubgroupClass> classes;
  for (Mask m : found) {
    if (assigned.count(m)) continue;
    std::set<std::vector<std::size_t>> conj;
    const auto members = from_mask(m);
    for (std::size_t g = 0; g < order_; ++g) {
      std::vector<std::size_t> c;
      for (auto h : members) c.push_back(mul(mul(g, h), inverse(g)));
      std::sort(c.begin(), c.end());
      conj.insert(c);
    }
    SubgroupClass cls;
    cls.conjugates.assign(conj.begin(), conj.end());
    cls.representative = cls.conjugates.front();
    cls.index_in_P = order_ / cls.representative.size();
    for (const auto& c : cls.conjugates) assigned.insert(to_mask(c));
    // Greedy generating set: repeatedly add the element that enlarges the
    // generated subgroup the most.
    std::vector<std::size_t> span{0};
    while (span.size() < cls.representative.size()) {
      std::size_t best = 0;
      std::vector<std::size_t> best_span;
      for (auto h : cls.representative) {
        if (std::binary_search(span.begin(), span.end(), h)) continue;
        auto gens = cls.generators;
        gens.push_back(h);
        auto s = closure(gens);
        if (s.size() > best_span.size()) {
          best_span = std::move(s);
          best = h;
        }
      }
      cls.generators.push_back(best);
      span = std::move(best_span);
    }
    classes.push_back(std::move(cls));
  }
  std::sort(classes.begin(), classes.end(), [](const SubgroupClass& a, const SubgroupClass& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return a.representative < b.representative;
  });
  for (std::size_t i = 0; i < classes.size(); ++i) classes[i].id = i;
  classes_ = std::move(classes);
}

const SubgroupClass& PGroup::class_of(const std::vector<std::size_t>& subgroup) const {
  auto sorted = subgroup;
  std::sort(sorted.begin(), sorted.end());
  for (const auto& cls : classes_) {
    if (cls.order() != sorted.size()) continue;
    if (std::find(cls.conjugates.begin(), cls.conjugates.end(), sorted) != cls.conjugates.end()) return cls;
  }
  throw InvalidArgument("group " + name_ + ": not a subgroup");
}

const SubgroupClass& PGroup::cyclic_subgroup(std::size_t g) const {
  if (g >= order_) throw InvalidArgument("group " + name_ + ": element out of range");
  return class_of(closure({g}));
}

std::vector<const SubgroupClass*> PGroup::maximal_classes() const {
  std::vector<const SubgroupClass*> out;
  for (const auto& cls : classes_) {
    if (cls.index_in_P == static_cast<std::size_t>(p_)) out.push_back(&cls);
  }
  return out;
}

CosetAction PGroup::coset_action(const SubgroupClass& Q) const {
  CosetAction act;
  act.coset_of.assign(order_, order_);
  for (std::size_t x = 0; x < order_; ++x) {
    if (act.coset_of[x] != order_) continue;
    std::vector<std::size_t> coset;
    for (auto q : Q.representative) coset.push_back(mul(x, q));
    std::sort(coset.begin(), coset.end());
    const std::size_t idx = act.cosets.size();
    for (auto y : coset) act.coset_of[y] = idx;
    act.representatives.push_back(coset.front());
    act.cosets.push_back(std::move(coset));
  }
  for (auto g : generators_) {
    std::vector<std::size_t> perm(act.size());
    for (std::size_t c = 0; c < act.size(); ++c) perm[c] = act.coset_of[mul(g, act.representatives[c])];
    act.generator_perms.push_back(std::move(perm));
  }
  return act;
}

PGroup::Subgroup PGroup::subgroup_group(const SubgroupClass& Q) const {
  Subgroup out;
  out.embedding = Q.representative;  // sorted, so identity comes first
  std::map<std::size_t, std::size_t> local;
  for (std::size_t i = 0; i < out.embedding.size(); ++i) local[out.embedding[i]] = i;
  const std::size_t m = out.embedding.size();
  std::vector<std::size_t> table(m * m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) table[i * m + j] = local.at(mul(out.embedding[i], out.embedding[j]));
  }
  std::vector<std::size_t> gens;
  for (auto g : Q.generators) gens.push_back(local.at(g));
  std::string name = name_ + "/sub" + std::to_string(Q.id);
  out.group = from_table(std::move(name), p_, std::move(table), std::move(gens));
  return out;
}

namespace catalog {

namespace {

int prime_of(std::size_t n) {
  for (std::size_t d = 2; d <= n; ++d) {
    if (n % d == 0) return static_cast<int>(d);
  }
  throw InvalidArgument("group order must be at least 2");
}

// Groups x^a y^b with x^m = 1, y^2 = x^t, y x y^-1 = x^r; index a + m b.
GroupPtr metacyclic(std::string name, std::size_t m, std::size_t t, std::size_t r) {
  const std::size_t n = 2 * m;
  std::vector<std::size_t> rpow{1 % m, r % m};
  std::vector<std::size_t> table(n * n);
  for (std::size_t e1 = 0; e1 < n; ++e1) {
    for (std::size_t e2 = 0; e2 < n; ++e2) {
      std::size_t a = e1 % m, b = e1 / m, c = e2 % m, d = e2 / m;
      // (x^a y^b)(x^c y^d) = x^{a + r^b c} y^{b + d}
      std::size_t exp = (a + rpow[b] * c) % m;
      std::size_t ys = b + d;
      if (ys == 2) {
        exp = (exp + t) % m;
        ys = 0;
      }
      table[e1 * n + e2] = exp + m * ys;
    }
  }
  return PGroup::from_table(std::move(name), 2, std::move(table), {1, m});
}

void require_two_power(std::size_t n, std::size_t min, const std::string& what) {
  if (n < min || !is_power_of(n, 2)) {
    throw InvalidArgument(what + " order must be a power of 2 and at least " + std::to_string(min));
  }
}

}  // namespace

GroupPtr cyclic(std::size_t n) {
  if (n < 2) throw InvalidArgument("cyclic group order must be at least 2");
  const int p = prime_of(n);
  if (!is_power_of(n, static_cast<std::size_t>(p))) throw InvalidArgument("C" + std::to_string(n) + " is not a p-group");
  std::vector<std::size_t> table(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) table[a * n + b] = (a + b) % n;
  }
  return PGroup::from_table("C" + std::to_string(n), p, std::move(table), {1});
}

GroupPtr dihedral(std::size_t n) {
  require_two_power(n, 4, "dihedral");
  return metacyclic("D" + std::to_string(n), n / 2, 0, n / 2 - 1);
}

GroupPtr quaternion(std::size_t n) {
  require_two_power(n, 8, "quaternion");
  return metacyclic("Q" + std::to_string(n), n / 2, n / 4, n / 2 - 1);
}

GroupPtr semidihedral(std::size_t n) {
  require_two_power(n, 16, "semi-dihedral");
  return metacyclic("SD" + std::to_string(n), n / 2, 0, n / 4 - 1);
}

GroupPtr direct_product(const GroupPtr& a, const GroupPtr& b) {
  if (a->p() != b->p()) throw InvalidArgument("direct product of groups for different primes");
  const std::size_t na = a->order(), nb = b->order(), n = na * nb;
  std::vector<std::size_t> table(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      table[x * n + y] = a->mul(x / nb, y / nb) * nb + b->mul(x % nb, y % nb);
    }
  }
  std::vector<std::size_t> gens;
  for (auto g : a->generators()) gens.push_back(g * nb);
  for (auto g : b->generators()) gens.push_back(g);
  return PGroup::from_table(a->name() + "x" + b->name(), a->p(), std::move(table), std::move(gens));
}

GroupPtr elementary_abelian(int p, int rank) {
  if (rank < 1) throw InvalidArgument("elementary abelian rank must be >= 1");
  GroupPtr g = cyclic(static_cast<std::size_t>(p));
  for (int i = 1; i < rank; ++i) g = direct_product(g, cyclic(static_cast<std::size_t>(p)));
  return g;
}

GroupPtr build_group(const std::string& spec) {
  if (spec.empty()) throw InvalidArgument("empty group spec");
  std::vector<std::string> factors;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= spec.size(); ++i) {
    if (i == spec.size() || spec[i] == 'x') {
      factors.push_back(spec.substr(start, i - start));
      start = i + 1;
    }
  }
  GroupPtr result;
  for (const auto& f : factors) {
    std::size_t digits = 0;
    while (digits < f.size() && !std::isdigit(static_cast<unsigned char>(f[digits]))) ++digits;
    const std::string kind = f.substr(0, digits);
    const std::string num = f.substr(digits);
    if (num.empty() || num.find_first_not_of("0123456789") != std::string::npos || num.size() > 4) {
      throw InvalidArgument("malformed group spec '" + spec + "'");
    }
    const std::size_t n = std::stoul(num);
    GroupPtr g;
    if (kind == "C") {
      g = cyclic(n);
    } else if (kind == "D") {
      g = dihedral(n);
    } else if (kind == "Q") {
      g = quaternion(n);
    } else if (kind == "SD") {
      g = semidihedral(n);
    } else {
      throw InvalidArgument("malformed group spec '" + spec + "'");
    }
    result = result ? direct_product(result, g) : g;
  }
  return result;
}

const std::vector<std::string>& standard_specs() {
  static const std::vector<std::string> specs{"C2", "C4", "C8", "C2xC2", "C2xC4", "D8", "Q8", "C3", "C9", "C3xC3"};
  return specs;
}

}  // namespace catalog
}  // namespace dadelab
