#include "dadelab/harness.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <iomanip>
#include <map>
#include <sstream>

#include <json.hpp>

#include "checks.hpp"

namespace dadelab::harness {

namespace {

using CheckFn = checks::Outcome (*)(const GroupPtr&, int, std::uint64_t);

struct Entry {
  CheckInfo info;
  CheckFn fn;
  std::function<bool(const PGroup&)> applies;
};

bool is_two_group(const PGroup& P) { return P.p() == 2; }
bool named(const PGroup& P, std::initializer_list<const char*> names) {
  return std::any_of(names.begin(), names.end(), [&](const char* n) { return P.name() == n; });
}

const std::vector<Entry>& entries() {
  static const std::vector<Entry> e{
      {{"D1", "det(g, OP) = -1 for generators of cyclic P, 1 for other g"},
       checks::d1_regular_determinant, is_two_group},
      {{"D2", "det(g, Omega^1(O)) = -1 for generators of cyclic 2-groups"},
       checks::d2_omega_determinant_cyclic, [](const PGroup& P) { return is_two_group(P) && P.is_cyclic(); }},
      {{"D3", "det(g, Omega^m(O)) = 1 when <g> < P, m in -3..3"},
       checks::d3_omega_determinant_noncyclic, is_two_group},
      {{"D4", "Phi of Omega^1(k) and of Omega_{P/Q}(k), |P:Q| >= 4, is O^- (x) the native lift"},
       checks::d4_phi_sign_twist, [](const PGroup& P) { return named(P, {"C4", "C8"}); }},
      {{"D5", "determinants of duals, tensors and sums; Phi commutes with duals and tensors"},
       checks::d5_determinant_identities, [](const PGroup&) { return true; }},
      {{"D6", "odd p: permutation lattices have trivial determinant; Phi respects products"},
       checks::d6_odd_multiplicativity, [](const PGroup& P) { return P.p() % 2 == 1; }},
      {{"S1", "[Omega^1(k)] over Q8 and its Phi-class have order 4"},
       checks::s1_order_four, [](const PGroup& P) { return named(P, {"Q8"}); }},
      {{"S2", "a class of order 2 found among relative syzygy products has a Phi-class of order 2"},
       checks::s2_order_two, [](const PGroup& P) { return named(P, {"D8", "Q8"}); }},
      {{"S3", "reduction and orders preserved on the configured generators"},
       checks::s3_section, [](const PGroup&) { return true; }},
      {{"K1", "kernel of reduction on one-dimensional lattices is X(P), of order |P/[P,P]|"},
       checks::k1_kernel, [](const PGroup&) { return true; }},
      {{"T1", "reduction is multiplicative on random products"},
       checks::t1_reduction_homomorphism, [](const PGroup&) { return true; }},
      {{"P1", "every check has the same status at precision N and 2N"}, nullptr, [](const PGroup&) { return true; }},
      {{"O1", "decompose agrees with exhaustive idempotent search in dimension <= 6"},
       checks::o1_oracle, [](const PGroup& P) { return named(P, {"C2", "C4"}); }},
  };
  return e;
}

const Entry& find_entry(const std::string& id) {
  for (const auto& e : entries()) {
    if (e.info.id == id) return e;
  }
  throw InvalidArgument("unknown check id '" + id + "'");
}

}  // namespace

std::string to_string(Status s) {
  switch (s) {
    case Status::kPass:
      return "pass";
    case Status::kFail:
      return "fail";
    case Status::kUnresolved:
      return "unresolved";
  }
  return "fail";
}

const std::vector<CheckInfo>& registry() {
  static const std::vector<CheckInfo> r = [] {
    std::vector<CheckInfo> out;
    for (const auto& e : entries()) out.push_back(e.info);
    return out;
  }();
  return r;
}

bool applies(const std::string& check_id, const PGroup& P) { return find_entry(check_id).applies(P); }

CheckResult run_check(const std::string& check_id, const std::string& group, int N, std::uint64_t seed) {
  const Entry& e = find_entry(check_id);
  if (!e.fn) throw InvalidArgument("check " + check_id + " is run by run_suite");
  const GroupPtr P = catalog::build_group(group);
  CheckResult r;
  r.check_id = check_id;
  r.group = group;
  r.p = P->p();
  r.n = P->exponent_log();
  r.N = N;
  r.seed = seed;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    const checks::Outcome o = e.fn(P, N, seed);
    r.status = o.status;
    r.details = o.details;
  } catch (const std::exception& ex) {
    r.status = Status::kFail;
    r.details = std::string("error: ") + ex.what();
  }
  r.elapsed_ms =
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

std::vector<CheckResult> run_suite(const std::vector<std::string>& groups, int N, std::uint64_t seed,
                                   const std::vector<std::string>& suite) {
  if (N < 4) throw InvalidArgument("precision must be at least 4");
  for (const auto& id : suite) find_entry(id);
  std::vector<GroupPtr> built;
  for (const auto& g : groups) built.push_back(catalog::build_group(g));
  auto selected = [&](const std::string& id) {
    return suite.empty() || std::find(suite.begin(), suite.end(), id) != suite.end();
  };
  const bool want_p1 = selected("P1");

  // Statuses at N keyed by (check, group), reused by P1.
  std::map<std::pair<std::string, std::string>, CheckResult> at_n;
  for (const auto& e : entries()) {
    if (!e.fn || !(selected(e.info.id) || want_p1)) continue;
    for (std::size_t i = 0; i < groups.size(); ++i) {
      if (e.applies(*built[i])) at_n[{e.info.id, groups[i]}] = run_check(e.info.id, groups[i], N, seed);
    }
  }

  std::vector<CheckResult> out;
  for (const auto& e : entries()) {
    if (!selected(e.info.id)) continue;
    for (std::size_t i = 0; i < groups.size(); ++i) {
      if (!e.applies(*built[i])) continue;
      if (e.fn) {
        out.push_back(at_n.at({e.info.id, groups[i]}));
        continue;
      }
      CheckResult r;
      r.check_id = e.info.id;
      r.group = groups[i];
      r.p = built[i]->p();
      r.n = built[i]->exponent_log();
      r.N = N;
      r.seed = seed;
      const auto t0 = std::chrono::steady_clock::now();
      std::vector<std::string> same, differ;
      for (const auto& [key, res] : at_n) {
        if (key.second != groups[i]) continue;
        const CheckResult twice = run_check(key.first, groups[i], 2 * N, seed);
        (twice.status == res.status ? same : differ)
            .push_back(key.first + "=" + to_string(res.status) + (twice.status == res.status ? "" : "/" + to_string(twice.status)));
      }
      std::ostringstream d;
      d << "N=" << N << " vs " << 2 * N << ": ";
      if (differ.empty()) {
        r.status = Status::kPass;
        d << same.size() << " checks agree";
      } else {
        r.status = Status::kFail;
        d << "status changed for";
        for (const auto& s : differ) d << " " << s;
      }
      r.details = d.str();
      r.elapsed_ms =
          std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count();
      out.push_back(r);
    }
  }
  return out;
}

std::string report_text(const std::vector<CheckResult>& results) {
  std::size_t wg = 5;
  for (const auto& r : results) wg = std::max(wg, r.group.size());
  std::ostringstream os;
  os << std::left << std::setw(6) << "check" << std::setw(static_cast<int>(wg) + 2) << "group" << std::setw(12)
     << "ring" << std::setw(12) << "status" << std::setw(10) << "ms"
     << "details\n";
  std::size_t passed = 0, failed = 0, unres = 0;
  for (const auto& r : results) {
    const std::string ring = "p=" + std::to_string(r.p) + " n=" + std::to_string(r.n);
    os << std::setw(6) << r.check_id << std::setw(static_cast<int>(wg) + 2) << r.group << std::setw(12) << ring
       << std::setw(12) << to_string(r.status) << std::setw(10) << r.elapsed_ms << r.details << "\n";
    (r.status == Status::kPass ? passed : r.status == Status::kFail ? failed : unres)++;
  }
  os << "passed=" << passed << " failed=" << failed << " unresolved=" << unres << "\n";
  return os.str();
}

std::string report_json(const std::vector<CheckResult>& results) {
  std::ostringstream os;
  for (const auto& r : results) {
    nlohmann::ordered_json j;
    j["check_id"] = r.check_id;
    j["group"] = r.group;
    j["p"] = r.p;
    j["n"] = r.n;
    j["N"] = r.N;
    j["status"] = to_string(r.status);
    j["details"] = r.details;
    j["elapsed_ms"] = r.elapsed_ms;
    j["seed"] = r.seed;
    os << j.dump() << "\n";
  }
  return os.str();
}

int exit_code(const std::vector<CheckResult>& results) {
  return std::any_of(results.begin(), results.end(), [](const CheckResult& r) { return r.status == Status::kFail; })
             ? 1
             : 0;
}

}  // namespace dadelab::harness
