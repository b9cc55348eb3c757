#include "moipgb/bench.hpp"

#include <algorithm>
#include <chrono>
#include <iomanip>
#include <ostream>
#include <random>
#include <sstream>

namespace moipgb {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::mt19937_64 make_rng(std::uint64_t seed, std::uint64_t stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
  return std::mt19937_64(seq);
}

long long draw(std::mt19937_64& rng, long long lo, long long hi) {
  return std::uniform_int_distribution<long long>(lo, hi)(rng);
}

IntMat random_costs(std::mt19937_64& rng, std::size_t k, std::size_t n, std::size_t free_from,
                    long long coef_max) {
  std::vector<IntVec> rows;
  for (std::size_t i = 0; i < k; ++i) {
    IntVec r = zeros(n);
    for (std::size_t j = 0; j < free_from; ++j) r[j] = draw(rng, 0, coef_max);
    rows.push_back(std::move(r));
  }
  return IntMat(std::move(rows));
}

// Supplies and demands in [1, 20], then the smaller side absorbs the
// difference at a random position.
IntVec transport_rhs(std::mt19937_64& rng, std::size_t s, std::size_t d) {
  IntVec b;
  long long ss = 0, sd = 0;
  for (std::size_t i = 0; i < s; ++i) {
    b.emplace_back(draw(rng, 1, 20));
    ss += b.back().convert_to<long long>();
  }
  for (std::size_t j = 0; j < d; ++j) {
    b.emplace_back(draw(rng, 1, 20));
    sd += b.back().convert_to<long long>();
  }
  if (ss > sd) {
    b[s + static_cast<std::size_t>(draw(rng, 0, static_cast<long long>(d) - 1))] += ss - sd;
  } else if (sd > ss) {
    b[static_cast<std::size_t>(draw(rng, 0, static_cast<long long>(s) - 1))] += sd - ss;
  }
  return b;
}

IntMat transport_matrix(std::size_t s, std::size_t d) {
  IntMat A(s + d, s * d);
  for (std::size_t i = 0; i < s; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      A(i, i * d + j) = 1;
      A(s + j, i * d + j) = 1;
    }
  }
  return A;
}

bool same_solutions(const ParetoSet& a, const ParetoSet& b) {
  return a.infeasible == b.infeasible && a.solutions == b.solutions;
}

}  // namespace

MoipInstance gen_knapsack(std::size_t n, std::size_t k, std::uint64_t seed, long long coef_max) {
  if (n < 2) throw InvalidInput("gen_knapsack needs n >= 2");
  if (k < 1) throw InvalidInput("gen_knapsack needs k >= 1");
  auto rng = make_rng(seed, 0x6b6e6170);
  IntVec a;
  do {
    a.clear();
    for (std::size_t j = 0; j < n; ++j) a.emplace_back(draw(rng, 0, coef_max));
  } while (is_zero(a));
  Integer total = 0;
  for (const auto& x : a) total += x;
  const Integer b = (total + 1) / 2;
  MoipInstance inst;
  IntVec row = a;
  row.emplace_back(-1);
  inst.A = IntMat(std::vector<IntVec>{row});
  inst.b = {b};
  inst.C = random_costs(rng, k, n + 1, n, coef_max);
  IntVec ub;
  Integer reach = 0;
  for (const auto& x : a) {
    ub.push_back(x > 0 ? Integer((b + x - 1) / x) : Integer(1));
    reach += x * ub.back();
  }
  ub.push_back(reach - b);
  inst.bounds = ub;
  inst.slack_indices = {n};
  return inst;
}

MoipInstance gen_transport(std::size_t s, std::size_t d, std::size_t k, std::uint64_t seed,
                           long long coef_max) {
  if (s < 2 || d < 2) throw InvalidInput("gen_transport needs s, d >= 2");
  if (k < 1) throw InvalidInput("gen_transport needs k >= 1");
  auto rng = make_rng(seed, 0x7472616e);
  MoipInstance inst;
  inst.A = transport_matrix(s, d);
  inst.b = transport_rhs(rng, s, d);
  inst.C = random_costs(rng, k, s * d, s * d, coef_max);
  return inst;
}

std::string problem_name(const BenchConfig& cfg) {
  std::ostringstream os;
  if (cfg.family == Family::Knapsack) {
    os << "knap" << cfg.vars << "_" << cfg.objectives;
  } else {
    os << "tranp" << cfg.origins << "x" << cfg.destinations << "_" << cfg.objectives;
  }
  return os.str();
}

BenchRecord BenchReport::summary() const {
  BenchRecord s;
  s.problem = name;
  if (records.empty()) return s;
  const double n = static_cast<double>(records.size());
  double pos_count = 0, chains = 0, steps = 0;
  for (const auto& r : records) {
    s.sog += r.sog / n;
    s.pgroebner += r.pgroebner / n;
    s.pos += r.pos / n;
    s.total += r.total / n;
    s.act_pgb += r.act_pgb / n;
    pos_count += static_cast<double>(r.pos_count);
    chains += static_cast<double>(r.maxchains);
    steps += static_cast<double>(r.steps);
  }
  s.pos_count = static_cast<std::size_t>(pos_count / n + 0.5);
  s.maxchains = static_cast<std::uint64_t>(chains / n + 0.5);
  s.steps = static_cast<std::size_t>(steps / n + 0.5);
  return s;
}

BenchReport run_bench(const BenchConfig& cfg) {
  if (cfg.objectives < 1) throw InvalidInput("bench: at least one objective is required");
  BenchReport rep;
  rep.name = problem_name(cfg);
  const bool knap = cfg.family == Family::Knapsack;
  const std::size_t per_constraint = knap ? cfg.objectives_per_constraint : 1;
  const std::size_t per_basis = knap ? 1 : cfg.rhs_per_basis;
  for (std::size_t i = 0; i < cfg.instances; ++i) {
    const std::uint64_t base = cfg.seed * 1000003ULL + i;
    // Stage 1: generators, shared by every objective matrix on this system.
    MoipInstance inst = knap ? gen_knapsack(cfg.vars, cfg.objectives, base, cfg.coef_max)
                             : gen_transport(cfg.origins, cfg.destinations, cfg.objectives, base,
                                             cfg.coef_max);
    auto t = Clock::now();
    GeneratorSet gens;
    try {
      gens = set_of_generators(working_matrix(inst));
    } catch (const std::exception& e) {
      rep.notes.push_back(rep.name + "#" + std::to_string(i) + ": generators failed: " + e.what());
      continue;
    }
    const double sog = seconds_since(t);
    auto rng = make_rng(base, 0x636f7374);
    for (std::size_t o = 0; o < per_constraint; ++o) {
      // Stage 2: one basis per objective matrix.
      if (o > 0 || !knap) {
        inst.C = random_costs(rng, cfg.objectives, inst.num_vars(),
                              knap ? inst.num_vars() - 1 : inst.num_vars(), cfg.coef_max);
      }
      const PartialOrderSpec spec = effective_spec(inst, OrderVariant::Plain);
      t = Clock::now();
      PGroebnerBasis basis;
      try {
        basis = basis_from_generators(inst, spec, gens, cfg.solve);
      } catch (const std::exception& e) {
        rep.notes.push_back(rep.name + "#" + std::to_string(i) + "." + std::to_string(o) +
                            ": basis failed: " + e.what());
        continue;
      }
      const double pgb = seconds_since(t);
      for (std::size_t r = 0; r < per_basis; ++r) {
        // Stage 3: Pareto set for each right-hand side, reusing the basis.
        if (r > 0) inst.b = transport_rhs(rng, cfg.origins, cfg.destinations);
        const std::string tag = rep.name + "#" + std::to_string(i) + "." + std::to_string(o) + "." +
                                std::to_string(r);
        BenchRecord rec;
        rec.problem = tag;
        ParetoSet ps;
        try {
          ps = solve_with_basis(inst, basis, cfg.solve);
        } catch (const std::exception& e) {
          rep.notes.push_back(tag + ": solve failed: " + e.what());
          continue;
        }
        rec.sog = sog;
        rec.pgroebner = pgb;
        rec.pos = ps.times.pos;
        rec.total = sog + pgb + ps.times.pos;
        rec.pos_count = ps.solutions.size();
        rec.maxchains = basis.chain_count();
        rec.steps = basis.steps;
        rec.act_pgb = std::max(0.0, basis.seconds - basis.last_growth_seconds);
        if (cfg.check_oracle) {
          try {
            auto bounds = require_bounds(inst);
            enumerate_fiber(inst, bounds, cfg.oracle_budget);  // budget probe
            ParetoSet oracle = oracle_pareto(inst, spec);
            rec.oracle_checked = true;
            rec.oracle_match = same_solutions(ps, oracle);
            if (!rec.oracle_match) {
              ++rep.mismatches;
              rep.notes.push_back(tag + ": MISMATCH against the oracle");
            }
          } catch (const LimitExceeded&) {
            rep.notes.push_back(tag + ": oracle skipped (budget)");
          } catch (const UnboundedRegion&) {
            rep.notes.push_back(tag + ": oracle skipped (unbounded)");
          }
        }
        rep.records.push_back(std::move(rec));
      }
    }
  }
  return rep;
}

void write_csv(std::ostream& os, const BenchReport& report, bool with_records) {
  os << "problem,sog,pgroebner,pos,total,pos_count,maxchains,steps,act_pgb\n";
  auto row = [&](const BenchRecord& r) {
    os << r.problem << std::fixed << std::setprecision(6) << ',' << r.sog << ',' << r.pgroebner
       << ',' << r.pos << ',' << r.total << ',' << r.pos_count << ',' << r.maxchains << ','
       << r.steps << ',' << r.act_pgb << '\n';
    os.unsetf(std::ios::floatfield);
  };
  if (with_records) {
    for (const auto& r : report.records) row(r);
  }
  if (report.has_summary()) row(report.summary());
}

}  // namespace moipgb
