#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "dadelab/dade.hpp"
#include "dadelab/harness.hpp"
#include "dadelab/heller.hpp"
#include "dadelab/module_io.hpp"
#include "dadelab/structure.hpp"

using namespace dadelab;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

GroupPtr group_or_usage(const std::string& spec) {
  try {
    return catalog::build_group(spec);
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
}

int default_precision() {
  if (const char* env = std::getenv("DADELAB_PRECISION")) {
    try {
      return std::stoi(env);
    } catch (const std::exception&) {
      throw UsageError(std::string("DADELAB_PRECISION is not an integer: ") + env);
    }
  }
  return harness::kDefaultPrecision;
}

// Per generator of P: the determinant as a power of zeta when it is one.
std::string determinant_table(const RPModule& M) {
  const Ring& R = *M.ring();
  std::string s;
  for (std::size_t i = 0; i < M.action().size(); ++i) {
    const Element d = linalg::determinant(R, M.generator_matrix(i));
    if (!s.empty()) s += ",";
    s += "g" + std::to_string(i) + ":";
    if (R.is_field()) {
      s += R.to_string(d);
    } else if (auto e = R.match_root_of_unity(d)) {
      s += "zeta^" + std::to_string(*e);
    } else {
      s += R.to_string(d);
    }
  }
  return s;
}

void emit_module(const RPModule& M, const std::string& out) {
  if (out.empty()) {
    write_module(M, std::cout);
  } else {
    write_module(M, out);
  }
  std::cout << "dim=" << M.dim() << " det=" << determinant_table(M) << "\n";
}

const Generator& find_generator(const std::vector<Generator>& gens, const std::string& name) {
  for (const auto& g : gens) {
    if (g.name == name) return g;
  }
  std::string names;
  for (const auto& g : gens) names += (names.empty() ? "" : ", ") + g.name;
  throw UsageError("unknown generator '" + name + "' (configured: " + names + ")");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Dade group and endo-permutation lattice toolkit"};
  app.require_subcommand(1);

  std::string groups_arg, suite_arg, format = "text", out_path;
  int precision = 0;
  std::uint64_t seed = harness::kDefaultSeed;
  auto* verify = app.add_subcommand("verify", "run the check suite");
  verify->add_option("--group", groups_arg, "comma-separated catalog specs")->required();
  verify->add_option("--precision", precision, "p-adic precision N");
  verify->add_option("--seed", seed, "random seed");
  verify->add_option("--suite", suite_arg, "comma-separated check ids (default: all)");
  verify->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
  verify->add_option("--out", out_path, "write the report here");

  std::string group, ring = "O", gen_name;
  int m = 1, rel = -1;
  std::size_t bound = kDefaultOrderBound;
  auto* compute = app.add_subcommand("compute", "construct modules");
  compute->require_subcommand(1);
  auto* omega = compute->add_subcommand("omega", "Omega^m of the trivial module, or a relative syzygy");
  omega->add_option("--group", group)->required();
  omega->add_option("--ring", ring)->check(CLI::IsMember({"k", "O"}));
  omega->add_option("--m", m);
  omega->add_option("--rel", rel, "subgroup class id Q for Omega_{P/Q}");
  omega->add_option("--precision", precision);
  omega->add_option("--out", out_path);

  auto* dade = app.add_subcommand("dade", "Dade group operations on configured generators");
  dade->require_subcommand(1);
  auto* d_order = dade->add_subcommand("order", "order of a configured generator");
  d_order->add_option("--group", group)->required();
  d_order->add_option("--gen", gen_name)->required();
  d_order->add_option("--bound", bound);
  d_order->add_option("--ring", ring)->check(CLI::IsMember({"k", "O"}));
  d_order->add_option("--precision", precision);
  auto* d_lift = dade->add_subcommand("lift", "determinant-one lift of a configured generator");
  d_lift->add_option("--group", group)->required();
  d_lift->add_option("--gen", gen_name)->required();
  d_lift->add_option("--precision", precision);
  d_lift->add_option("--out", out_path);
  auto* d_section = dade->add_subcommand("section", "section report on the configured generators");
  d_section->add_option("--group", group)->required();
  d_section->add_option("--bound", bound);
  d_section->add_option("--precision", precision);

  auto* subgroups = app.add_subcommand("subgroups", "list subgroup classes");
  subgroups->add_option("--group", group)->required();

  std::string in_path;
  auto* decomp = app.add_subcommand("decompose", "indecomposable summands of a module file");
  decomp->add_option("--in", in_path)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    const int N = precision > 0 ? precision : default_precision();
    if (N < 1) throw UsageError("precision must be positive");

    if (*verify) {
      const auto groups = split_list(groups_arg);
      for (const auto& g : groups) group_or_usage(g);
      std::vector<harness::CheckResult> results;
      try {
        results = harness::run_suite(groups, N, seed, split_list(suite_arg));
      } catch (const InvalidArgument& e) {
        throw UsageError(e.what());
      }
      const std::string report = format == "json" ? harness::report_json(results) : harness::report_text(results);
      if (out_path.empty()) {
        std::cout << report;
      } else {
        std::ofstream(out_path) << report;
        std::cout << (format == "json" ? harness::report_text(results) : report);
      }
      return harness::exit_code(results);
    }

    if (*subgroups) {
      const GroupPtr P = group_or_usage(group);
      for (const auto& Q : P->subgroup_classes()) {
        std::cout << "class " << Q.id << " order " << Q.order() << " index " << Q.index_in_P << " conjugates "
                  << Q.conjugates.size() << "\n";
      }
      return 0;
    }

    if (*decomp) {
      const RPModule M = read_module(in_path);
      const Decomposition d = decompose(M);
      std::cout << "dim=" << M.dim() << " summands=" << d.summands.size() << "\n";
      for (const auto& s : d.summands) {
        std::cout << "  dim " << s.module.dim() << " x" << s.multiplicity
                  << (has_full_vertex(s.module) ? " vertex P" : "") << "\n";
      }
      return 0;
    }

    const GroupPtr P = group_or_usage(group);
    if (*omega) {
      const RingPtr R = coefficient_ring(*P, ring == "O", N);
      if (rel >= 0) {
        if (m != 1) throw UsageError("relative syzygies are available for m = 1 only");
        if (static_cast<std::size_t>(rel) >= P->subgroup_classes().size()) throw UsageError("unknown subgroup class");
        emit_module(relative_syzygy(R, P, P->subgroup_classes()[static_cast<std::size_t>(rel)]), out_path);
      } else {
        emit_module(omega_power(R, P, m), out_path);
      }
      return 0;
    }

    const auto gens = configured_generators(P, N);
    if (*d_order) {
      const Generator& g = find_generator(gens, gen_name);
      const DadeElement a = ring == "k" ? element_of(g.k_module)
                                        : element_of_unchecked(determinant_one_lift(g.k_module, g.lift));
      std::cout << order(a, bound).to_string() << "\n";
      return 0;
    }
    if (*d_lift) {
      const Generator& g = find_generator(gens, gen_name);
      emit_module(determinant_one_lift(g.k_module, g.lift), out_path);
      return 0;
    }
    if (*d_section) {
      const SectionReport r = section_on_generators(gens, {}, bound);
      nlohmann::ordered_json j;
      j["group"] = group;
      j["bound"] = bound;
      j["limitation"] = r.limitation;
      j["all_passed"] = r.all_passed();
      j["entries"] = nlohmann::json::array();
      for (const auto& e : r.entries) {
        j["entries"].push_back({{"generator", e.generator}, {"check", e.check}, {"passed", e.passed}, {"detail", e.detail}});
      }
      std::cout << j.dump(2) << "\n";
      return r.all_passed() ? 0 : 1;
    }
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
