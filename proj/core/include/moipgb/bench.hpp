#ifndef MOIPGB_BENCH_HPP
#define MOIPGB_BENCH_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "moipgb/solver.hpp"

namespace moipgb {

enum class Family { Knapsack, Transport };

// Covering knapsack: min C x  s.t.  a x - s = ceil(sum(a) / 2), with
// x_j <= ceil(b / a_j) so that every fiber is finite.  The surplus s is the
// last column, marked as slack and free of cost.
MoipInstance gen_knapsack(std::size_t n, std::size_t k, std::uint64_t seed, long long coef_max = 20);

// Balanced transportation problem on s origins and d destinations; variable
// x_ij sits at column i * d + j.
MoipInstance gen_transport(std::size_t s, std::size_t d, std::size_t k, std::uint64_t seed,
                           long long coef_max = 20);

struct BenchConfig {
  Family family = Family::Knapsack;
  std::size_t vars = 4;  // knapsack
  std::size_t origins = 3;
  std::size_t destinations = 2;
  std::size_t objectives = 2;
  std::size_t instances = 5;                // constraint systems (knapsack) or cost sets (transport)
  std::size_t objectives_per_constraint = 5;  // knapsack only
  std::size_t rhs_per_basis = 5;            // transport only
  std::uint64_t seed = 1;
  long long coef_max = 10;
  bool check_oracle = true;
  std::size_t oracle_budget = 2'000'000;  // fiber nodes
  SolveOptions solve;
};

struct BenchRecord {
  std::string problem;
  double sog = 0;
  double pgroebner = 0;
  double pos = 0;
  double total = 0;
  std::size_t pos_count = 0;
  std::uint64_t maxchains = 0;
  std::size_t steps = 0;
  double act_pgb = 0;
  bool oracle_checked = false;
  bool oracle_match = false;
};

struct BenchReport {
  std::string name;  // e.g. knap4_2
  std::vector<BenchRecord> records;
  std::vector<std::string> notes;  // failures and skipped oracle checks
  std::size_t mismatches = 0;

  bool has_summary() const { return !records.empty(); }
  BenchRecord summary() const;  // column averages
};

std::string problem_name(const BenchConfig& cfg);
BenchReport run_bench(const BenchConfig& cfg);

void write_csv(std::ostream& os, const BenchReport& report, bool with_records = true);

}  // namespace moipgb

#endif  // MOIPGB_BENCH_HPP
