// moipgb command-line front end.
//
// Exit codes: 0 success, 1 infeasible (or failed criterion), 2 invalid input,
// 3 internal limit exceeded.

#include <fstream>
#include <iostream>
#include <limits>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "moipgb/bench.hpp"
#include "moipgb/instance_io.hpp"
#include "moipgb/solver.hpp"

namespace {

using namespace moipgb;
using nlohmann::json;

enum Exit { kOk = 0, kInfeasible = 1, kInvalid = 2, kLimit = 3 };

struct Common {
  std::string path;
  std::string order = "auto";
  std::optional<std::size_t> truncate;
};

PartialOrderSpec order_for(const MoipInstance& inst, const std::string& name) {
  if (name == "auto") return effective_spec(inst, OrderVariant::Plain);
  if (name == "plain") return PartialOrderSpec::plain(inst.C);
  if (name == "lex") return effective_spec(inst, OrderVariant::LexRefined);
  return effective_spec(inst, OrderVariant::SlackRefined);
}

Pipeline pipeline_for(const std::string& name) {
  if (name == "hs") return Pipeline::HostenSturmfels;
  if (name == "ct") return Pipeline::ContiTraverso;
  if (name == "corank1") return Pipeline::Corank1;
  return Pipeline::Auto;
}

// Exact integers: JSON numbers while they fit, decimal strings beyond.
json to_json(const Integer& v) {
  if (v >= std::numeric_limits<long long>::min() && v <= std::numeric_limits<long long>::max()) {
    return v.convert_to<long long>();
  }
  return v.str();
}

json to_json(const IntVec& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(to_json(x));
  return a;
}

std::string spaced(const IntVec& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ' ';
    s += v[i].str();
  }
  return s;
}

int print_pareto(const ParetoSet& ps, bool as_json) {
  if (as_json) {
    json doc;
    doc["pipeline"] = ps.provenance;
    doc["infeasible"] = ps.infeasible;
    doc["certified"] = ps.certified;
    doc["solutions"] = json::array();
    doc["images"] = json::array();
    for (std::size_t i = 0; i < ps.solutions.size(); ++i) {
      doc["solutions"].push_back(to_json(ps.solutions[i]));
      doc["images"].push_back(to_json(ps.images[i]));
    }
    doc["times"] = {{"sog", ps.times.sog},
                    {"pgroebner", ps.times.pgroebner},
                    {"pos", ps.times.pos},
                    {"total", ps.times.total}};
    doc["basis_size"] = ps.basis_size;
    doc["chains"] = ps.chain_count;
    doc["steps"] = ps.steps;
    std::cout << doc.dump(2) << '\n';
  } else if (ps.infeasible) {
    std::cout << "INFEASIBLE\n";
  } else {
    for (std::size_t i = 0; i < ps.solutions.size(); ++i) {
      std::cout << spaced(ps.solutions[i]) << " -> " << spaced(ps.images[i]) << '\n';
    }
  }
  if (!ps.certified) std::cerr << "warning: completion truncated, basis not certified\n";
  return ps.infeasible ? kInfeasible : kOk;
}

void add_common(CLI::App* cmd, Common& c, bool with_truncate) {
  cmd->add_option("instance", c.path, "instance file (JSON)")->required();
  cmd->add_option("--order", c.order, "partial order refinement")
      ->check(CLI::IsMember({"auto", "plain", "lex", "slack"}));
  if (with_truncate) {
    cmd->add_option("--truncate-steps", c.truncate, "stop completion after N steps");
  }
}

SolveOptions solve_options(const Common& c) {
  SolveOptions opt;
  opt.max_steps = c.truncate;
  return opt;
}

int run_generators(const Common& c) {
  const MoipInstance inst = load_instance(c.path);
  for (const Binomial& b : set_of_generators(inst.A)) {
    std::cout << b.plus << ' ' << b.minus << '\n';
  }
  return kOk;
}

int run_basis(const Common& c) {
  const MoipInstance inst = load_instance(c.path);
  const PGroebnerBasis basis = compute_basis(inst, order_for(inst, c.order), solve_options(c));
  std::cout << "# " << basis.size() << " elements, " << basis.chain_count() << " maximal chains, "
            << basis.steps << " steps" << (basis.certified ? "" : ", not certified") << '\n';
  std::size_t k = 0;
  for (const auto& chain : basis.chains()) {
    std::cout << "chain " << ++k << '\n';
    std::size_t i = 0;
    for (const auto& e : chain) std::cout << "  " << ++i << ' ' << e << '\n';
  }
  return kOk;
}

int run_check(const Common& c) {
  const MoipInstance inst = load_instance(c.path);
  const PGroebnerBasis basis = compute_basis(inst, order_for(inst, c.order), solve_options(c));
  const CriterionReport rep = check_criterion(basis);
  if (rep.ok) {
    std::cout << "criterion holds: " << basis.size() << " elements, " << basis.chain_count()
              << " maximal chains\n";
    return kOk;
  }
  std::cout << "criterion fails\n  pair " << *rep.first << "\n       " << *rep.second
            << "\n  s-vector " << *rep.witness << '\n';
  for (const auto& r : rep.remainder) std::cout << "  remainder " << r << '\n';
  return kInfeasible;
}

int run_skeleton(const Common& c, const std::string& fiber) {
  MoipInstance inst = load_instance(c.path);
  if (!fiber.empty()) inst.b = parse_vector(fiber);
  require_valid(inst);
  const PGroebnerBasis basis = compute_basis(inst, order_for(inst, c.order), solve_options(c));
  std::cout << to_dot(fiber_skeleton(inst, basis));
  return kOk;
}

struct BenchArgs {
  std::string family = "knapsack";
  std::string out;
  bool no_oracle = false;
  bool summary_only = false;
};

int run_bench_cmd(BenchConfig cfg, const BenchArgs& a) {
  cfg.family = a.family == "transport" ? Family::Transport : Family::Knapsack;
  cfg.check_oracle = !a.no_oracle;
  const BenchReport rep = run_bench(cfg);
  if (a.out.empty()) {
    write_csv(std::cout, rep, !a.summary_only);
  } else {
    std::ofstream os(a.out);
    if (!os) throw InvalidInput("cannot write " + a.out);
    write_csv(os, rep, !a.summary_only);
  }
  for (const auto& n : rep.notes) std::cerr << "note: " << n << '\n';
  if (rep.mismatches) {
    std::cerr << "error: " << rep.mismatches << " Pareto sets differ from the oracle\n";
    return kLimit;
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact multiobjective integer programming by partial Groebner bases"};
  app.require_subcommand(1);

  Common gen, bas, chk, sol, orc, skl;
  auto* g = app.add_subcommand("generators", "print a generating set of the toric ideal of A");
  add_common(g, gen, false);
  auto* b = app.add_subcommand("basis", "compute the partial Groebner basis");
  add_common(b, bas, true);
  auto* k = app.add_subcommand("check", "verify the completion criterion on the computed basis");
  add_common(k, chk, true);

  std::string pipeline = "auto";
  bool solve_json = false;
  auto* s = app.add_subcommand("solve", "compute the Pareto-optimal set");
  add_common(s, sol, true);
  s->add_option("--pipeline", pipeline, "solution pipeline")
      ->check(CLI::IsMember({"auto", "hs", "ct", "corank1"}));
  s->add_flag("--json", solve_json, "machine-readable output");

  bool oracle_json = false, quotient = false;
  auto* o = app.add_subcommand("oracle", "Pareto set by exhaustive fiber enumeration");
  add_common(o, orc, false);
  o->add_flag("--json", oracle_json, "machine-readable output");
  o->add_flag("--quotient", quotient, "report one representative per objective image");

  std::string fiber;
  auto* sk = app.add_subcommand("skeleton", "emit the fiber skeleton in DOT format");
  add_common(sk, skl, true);
  sk->add_option("--fiber", fiber, "right-hand side overriding b, e.g. 17,11");

  BenchConfig cfg;
  BenchArgs ba;
  std::size_t max_states = ReductionOptions{}.max_states;
  auto* bn = app.add_subcommand("bench", "run the random benchmark protocol, CSV output");
  bn->add_option("--family", ba.family)->check(CLI::IsMember({"knapsack", "transport"}));
  bn->add_option("--vars", cfg.vars, "knapsack variables");
  bn->add_option("--origins", cfg.origins, "transportation origins");
  bn->add_option("--destinations", cfg.destinations, "transportation destinations");
  bn->add_option("--objs", cfg.objectives, "objectives");
  bn->add_option("--seeds", cfg.instances, "constraint systems (knapsack) or cost sets (transport)");
  bn->add_option("--objs-per-constraint", cfg.objectives_per_constraint);
  bn->add_option("--rhs-per-basis", cfg.rhs_per_basis);
  bn->add_option("--seed", cfg.seed, "base seed");
  bn->add_option("--coef-max", cfg.coef_max, "largest random coefficient");
  bn->add_option("--truncate-steps", cfg.solve.max_steps);
  bn->add_option("--max-states", max_states, "reduction state budget");
  bn->add_option("--out", ba.out, "CSV file (default stdout)");
  bn->add_flag("--no-oracle", ba.no_oracle, "skip the enumeration cross-check");
  bn->add_flag("--summary-only", ba.summary_only, "only the averaged row");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kInvalid;
  }

  try {
    if (*g) return run_generators(gen);
    if (*b) return run_basis(bas);
    if (*k) return run_check(chk);
    if (*s) {
      const MoipInstance inst = load_instance(sol.path);
      SolveOptions opt = solve_options(sol);
      opt.pipeline = pipeline_for(pipeline);
      return print_pareto(solve(inst, order_for(inst, sol.order), opt), solve_json);
    }
    if (*o) {
      const MoipInstance inst = load_instance(orc.path);
      return print_pareto(oracle_pareto(inst, order_for(inst, orc.order), quotient), oracle_json);
    }
    if (*sk) return run_skeleton(skl, fiber);
    if (*bn) {
      cfg.solve.reduction.max_states = max_states;
      return run_bench_cmd(cfg, ba);
    }
  } catch (const InvalidInput& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInvalid;
  } catch (const UnboundedRegion& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInvalid;
  } catch (const LimitExceeded& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kLimit;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kLimit;
  }
  return kOk;
}
