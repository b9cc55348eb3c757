#ifndef MOIPGB_SOLVER_HPP
#define MOIPGB_SOLVER_HPP

#include <optional>
#include <string>
#include <vector>

#include "moipgb/binomial.hpp"
#include "moipgb/pgroebner.hpp"

namespace moipgb {

// Upper bounds implied by the equality rows (interval propagation to a fixed
// point) combined with explicit bounds.  nullopt when some variable stays
// unbounded.
std::optional<IntVec> derive_bounds(const MoipInstance& inst);
IntVec require_bounds(const MoipInstance& inst);  // throws UnboundedRegion

// Every x >= 0 with A x = b and x <= bounds, in lexicographic order.
std::vector<IntVec> enumerate_fiber(const MoipInstance& inst, const IntVec& bounds,
                                    std::size_t limit = 50'000'000);

// Some feasible point, or nullopt when the fiber is provably empty.
std::optional<IntVec> initial_feasible(const MoipInstance& inst);

// Order used for an instance: a plain request on an instance with declared
// zero-cost slack columns is refined by those slacks.
PartialOrderSpec effective_spec(const MoipInstance& inst, OrderVariant requested);

enum class Pipeline { Auto, HostenSturmfels, ContiTraverso, Corank1 };
const char* to_string(Pipeline p);

struct StageTimes {
  double sog = 0;
  double pgroebner = 0;
  double pos = 0;
  double total = 0;
};

struct ParetoSet {
  std::vector<IntVec> solutions;  // lexicographically sorted
  std::vector<IntVec> images;     // C x for each solution
  std::string provenance;
  bool infeasible = false;
  StageTimes times;
  std::size_t basis_size = 0;
  std::uint64_t chain_count = 0;
  std::size_t steps = 0;
  double act_pgb = 0;
  bool certified = true;
};

struct SolveOptions {
  Pipeline pipeline = Pipeline::Auto;
  std::optional<std::size_t> max_steps;
  ReductionOptions reduction;
};

ParetoSet solve(const MoipInstance& inst, const PartialOrderSpec& spec, const SolveOptions& opt = {});
ParetoSet solve(const MoipInstance& inst, OrderVariant variant = OrderVariant::Plain,
                const SolveOptions& opt = {});

ParetoSet solve_hosten_sturmfels(const MoipInstance& inst, const PartialOrderSpec& spec,
                                 const SolveOptions& opt = {});
ParetoSet solve_conti_traverso(const MoipInstance& inst, const PartialOrderSpec& spec,
                               const SolveOptions& opt = {});
ParetoSet solve_corank1(const MoipInstance& inst, const PartialOrderSpec& spec);

// Basis of the instance's constraint matrix (bounds turned into rows first);
// it serves every right-hand side.
PGroebnerBasis compute_basis(const MoipInstance& inst, const PartialOrderSpec& spec,
                             const SolveOptions& opt = {}, StageTimes* times = nullptr);
// Same, from generators of the working matrix (see working_matrix).
PGroebnerBasis basis_from_generators(const MoipInstance& inst, const PartialOrderSpec& spec,
                                     const GeneratorSet& gens, const SolveOptions& opt = {});
// Constraint matrix after explicit bounds become rows.
IntMat working_matrix(const MoipInstance& inst);
ParetoSet solve_with_basis(const MoipInstance& inst, const PGroebnerBasis& basis,
                           const SolveOptions& opt = {});

// Brute force: enumerate the fiber and keep the minimal points.  With
// `quotient` only the lexicographically smallest point of each image stays.
ParetoSet oracle_pareto(const MoipInstance& inst, const PartialOrderSpec& spec,
                        bool quotient = false);

// Extended program of the Conti-Traverso construction.
struct ExtendedInstance {
  MoipInstance base;
  IntMat A;  // [Id_m | -1 | A]
  PartialOrderSpec spec;
  std::vector<IntVec> F1, F2;
  IntVec start;  // (b, 0, ..., 0)
};

ExtendedInstance extend_instance(const MoipInstance& inst, const PartialOrderSpec& spec);

struct SkeletonEdge {
  std::size_t from;
  std::size_t to;
  std::size_t element;
  bool improving;  // tail strictly below the source
};

struct FiberSkeleton {
  std::vector<IntVec> nodes;
  std::vector<SkeletonEdge> edges;
  std::vector<bool> sink;  // no improving out-edge
  std::vector<std::size_t> sinks() const;
};

FiberSkeleton fiber_skeleton(const MoipInstance& inst, const PGroebnerBasis& basis);
std::string to_dot(const FiberSkeleton& sk);

}  // namespace moipgb

#endif  // MOIPGB_SOLVER_HPP
