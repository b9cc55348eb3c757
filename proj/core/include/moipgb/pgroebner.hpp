#ifndef MOIPGB_PGROEBNER_HPP
#define MOIPGB_PGROEBNER_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "moipgb/order.hpp"

namespace moipgb {

// A kernel move g with leading point h; the move takes h to its tail h - g.
// A point-pair (a, a) stands for the feasible point a itself.
struct DirectedPair {
  IntVec g;
  IntVec h;

  IntVec tail() const { return h - g; }
  bool is_point() const { return g == h && !is_zero(g); }
  bool is_zero_pair() const { return is_zero(g); }
  friend auto operator<=>(const DirectedPair&, const DirectedPair&) = default;
};

std::ostream& operator<<(std::ostream& os, const DirectedPair& p);

DirectedPair point_pair(const IntVec& a);

// (g, g+) oriented so that the leading point is not below its tail under
// `spec`.  Incomparable moves keep the given orientation.  Zero gives nullopt.
std::optional<DirectedPair> oriented_pair(const PartialOrderSpec& spec, const IntVec& g);

// phi(F(u, v)): one pair per leading point of {u, v}, normalized.
std::vector<DirectedPair> phi(const PartialOrderSpec& spec, const IntVec& u, const IntVec& v);

// Result of a partial reduction.  {0} is represented by a single zero pair.
using ReductionSet = std::vector<DirectedPair>;
bool is_zero_set(const ReductionSet& r);

struct ReductionOptions {
  std::size_t max_states = 2'000'000;
};

class PGroebnerBasis {
 public:
  PartialOrderSpec order;
  IntMat A;
  std::vector<DirectedPair> elements;  // sorted, unique
  bool certified = true;
  std::size_t steps = 0;
  double seconds = 0;
  double last_growth_seconds = 0;  // when the last element was added

  std::size_t size() const { return elements.size(); }
  bool empty() const { return elements.empty(); }
  std::vector<std::vector<DirectedPair>> chains() const;
  std::uint64_t chain_count() const;
};

PGroebnerBasis make_basis(const PartialOrderSpec& spec, const IntMat& A,
                          std::vector<DirectedPair> elements);

// Partial reduction of p by one chain (strictly decreasing leading points).
ReductionSet preduce(const DirectedPair& p, const std::vector<DirectedPair>& chain,
                     const PartialOrderSpec& spec, const ReductionOptions& opt = {});

// Partial remainders of p by a whole basis.
ReductionSet prem(const DirectedPair& p, const PGroebnerBasis& basis,
                  const ReductionOptions& opt = {});

// Same closure, visiting the given chains in the given order.
ReductionSet prem_chains(const DirectedPair& p, const std::vector<std::vector<DirectedPair>>& chains,
                         const PartialOrderSpec& spec, const ReductionOptions& opt = {});

// Leading points of prem(point_pair(a), basis).
std::vector<IntVec> reduce_point(const IntVec& a, const PGroebnerBasis& basis,
                                 const ReductionOptions& opt = {});

struct SVectorPair {
  DirectedPair s1;
  DirectedPair s2;
};

SVectorPair svectors(const DirectedPair& p, const DirectedPair& q, const PartialOrderSpec& spec);

struct CompletionOptions {
  std::optional<std::size_t> max_steps;
  ReductionOptions reduction;
};

// Completion from generator pairs {u_i, v_i} with u_i - v_i in ker(A).
// The result is reduced.
PGroebnerBasis pbuchberger(const IntMat& A, const std::vector<IntVec>& F1,
                           const std::vector<IntVec>& F2, const PartialOrderSpec& spec,
                           const CompletionOptions& opt = {});

PGroebnerBasis reduce_basis(PGroebnerBasis basis, const ReductionOptions& opt = {});

struct CriterionReport {
  bool ok = true;
  std::optional<DirectedPair> first;
  std::optional<DirectedPair> second;
  std::optional<DirectedPair> witness;  // the S-vector that does not reduce to zero
  ReductionSet remainder;
};

CriterionReport check_criterion(const PGroebnerBasis& basis, const ReductionOptions& opt = {});

}  // namespace moipgb

#endif  // MOIPGB_PGROEBNER_HPP
