#ifndef MOIPGB_TESTS_SUPPORT_HPP
#define MOIPGB_TESTS_SUPPORT_HPP

// Shared helpers for the unit and acceptance tests.  The brute-force Pareto
// oracle here is deliberately separate from the library's enumerator.

#include <algorithm>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "moipgb/bench.hpp"
#include "moipgb/instance_io.hpp"
#include "moipgb/solver.hpp"

namespace moipgb::testkit {

inline std::string fixture(const std::string& name) {
  return std::string(MOIPGB_FIXTURE_DIR) + "/" + name;
}

inline MoipInstance example4() {
  MoipInstance inst;
  inst.A = IntMat{{2, 2, -1, 0, 0}, {0, 2, 0, 1, 0}, {1, 0, 0, 0, 1}};
  inst.b = make_vec({17, 11, 10});
  inst.C = IntMat{{10, 1, 0, 0, 0}, {1, 10, 0, 0, 0}};
  inst.slack_indices = {2, 3, 4};
  return inst;
}

// Unbounded without the explicit bounds: (1,0,2,0) lies in the kernel.
inline MoipInstance example2(bool bounded) {
  MoipInstance inst;
  inst.A = IntMat{{2, 2, -1, 0}, {0, 2, 0, 1}};
  inst.b = make_vec({17, 11});
  inst.C = IntMat{{10, 1, 0, 0}, {1, 10, 0, 0}};
  inst.slack_indices = {2, 3};
  if (bounded) inst.bounds = make_vec({10, 5, 15, 11});
  return inst;
}

// Seeded corpus: knapsack with 3..5 items and 1..3 objectives, every fourth
// instance a 3x2 transportation problem.  Coefficients are at most 10.
inline MoipInstance random_instance(std::uint64_t seed, std::size_t k = 0) {
  if (k == 0) k = 1 + seed % 3;
  if (seed % 4 == 3) return gen_transport(3, 2, k, seed, 10);
  return gen_knapsack(3 + seed % 3, k, seed, 10);
}

inline std::vector<IntVec> sorted(std::vector<IntVec> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

// Upper bounds from explicit bounds, else by interval reasoning on each row
// until nothing tightens.
inline std::vector<long long> box(const MoipInstance& inst) {
  const std::size_t n = inst.num_vars();
  std::vector<long long> ub(n, -1);
  if (inst.bounds) {
    for (std::size_t j = 0; j < n; ++j) ub[j] = (*inst.bounds)[j].convert_to<long long>();
    return ub;
  }
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t i = 0; i < inst.num_constraints(); ++i) {
      const IntVec& r = inst.A.row(i);
      long long cap = inst.b[i].convert_to<long long>();
      bool finite = true;
      for (std::size_t k = 0; k < n; ++k) {
        if (r[k] >= 0) continue;
        if (ub[k] < 0) finite = false;
        else cap += (-r[k]).convert_to<long long>() * ub[k];
      }
      auto tighten = [&](std::size_t j, long long u) {
        if (ub[j] < 0 || u < ub[j]) {
          ub[j] = u;
          changed = true;
        }
      };
      if (finite) {
        for (std::size_t j = 0; j < n; ++j) {
          if (r[j] > 0) tighten(j, cap / r[j].convert_to<long long>());
        }
      }
      // The same row read the other way bounds the negative entries.
      long long reach = -inst.b[i].convert_to<long long>();
      finite = true;
      for (std::size_t k = 0; k < n; ++k) {
        if (r[k] <= 0) continue;
        if (ub[k] < 0) finite = false;
        else reach += r[k].convert_to<long long>() * ub[k];
      }
      if (!finite) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (r[j] < 0) tighten(j, reach / (-r[j]).convert_to<long long>());
      }
    }
  }
  return ub;
}

// All feasible points by depth-first assignment with a row-range check.
inline std::vector<IntVec> brute_fiber(const MoipInstance& inst) {
  const std::size_t n = inst.num_vars(), m = inst.num_constraints();
  const std::vector<long long> ub = box(inst);
  for (long long u : ub) {
    if (u < 0) throw std::runtime_error("brute_fiber: unbounded variable");
  }
  std::vector<std::vector<long long>> a(m, std::vector<long long>(n));
  std::vector<long long> rhs(m);
  for (std::size_t i = 0; i < m; ++i) {
    rhs[i] = inst.b[i].convert_to<long long>();
    for (std::size_t j = 0; j < n; ++j) a[i][j] = inst.A(i, j).convert_to<long long>();
  }
  // lo/hi[i][j]: range of sum_{k >= j} a_ik x_k over the box.
  std::vector<std::vector<long long>> lo(m, std::vector<long long>(n + 1, 0)), hi = lo;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = n; j-- > 0;) {
      long long t = a[i][j] * ub[j];
      lo[i][j] = lo[i][j + 1] + std::min(0LL, t);
      hi[i][j] = hi[i][j + 1] + std::max(0LL, t);
    }
  }
  std::vector<IntVec> out;
  std::vector<long long> x(n, 0), acc(m, 0);
  auto rec = [&](auto&& self, std::size_t j) -> void {
    for (std::size_t i = 0; i < m; ++i) {
      long long rest = rhs[i] - acc[i];
      if (rest < lo[i][j] || rest > hi[i][j]) return;
    }
    if (j == n) {
      IntVec v(n);
      for (std::size_t k = 0; k < n; ++k) v[k] = x[k];
      out.push_back(std::move(v));
      return;
    }
    for (long long t = 0; t <= ub[j]; ++t) {
      x[j] = t;
      for (std::size_t i = 0; i < m; ++i) acc[i] += a[i][j] * t;
      self(self, j + 1);
      for (std::size_t i = 0; i < m; ++i) acc[i] -= a[i][j] * t;
    }
    x[j] = 0;
  };
  rec(rec, 0);
  return out;
}

// y dominates x: C y <= C x componentwise and different, or (slack-refined)
// equal images with a lexicographically smaller slack sub-vector.
inline bool dominates(const MoipInstance& inst, bool slack_refined, const IntVec& y,
                      const IntVec& x) {
  const IntVec cy = inst.C * y, cx = inst.C * x;
  bool le = true;
  for (std::size_t i = 0; i < cx.size(); ++i) le = le && cy[i] <= cx[i];
  if (!le) return false;
  if (cy != cx) return true;
  if (!slack_refined) return false;
  IntVec sy, sx;
  for (std::size_t s : inst.slack_indices) {
    sy.push_back(y[s]);
    sx.push_back(x[s]);
  }
  return sy < sx;
}

inline std::vector<IntVec> brute_pareto(const MoipInstance& inst, bool slack_refined) {
  const std::vector<IntVec> pts = brute_fiber(inst);
  std::vector<IntVec> out;
  for (const auto& x : pts) {
    bool dominated = false;
    for (const auto& y : pts) {
      if (dominates(inst, slack_refined, y, x)) {
        dominated = true;
        break;
      }
    }
    if (!dominated) out.push_back(x);
  }
  return sorted(out);
}

// The order the solver picks by default for this instance.
inline bool uses_slack_refinement(const MoipInstance& inst) {
  return effective_spec(inst, OrderVariant::Plain).variant == OrderVariant::SlackRefined;
}

// Test-family property 3 on the fiber A x = b: every dominated point has a
// basis move that leads to a feasible, strictly better point.
inline bool improving_moves_exist(const PGroebnerBasis& basis, const IntVec& b) {
  MoipInstance fib;
  fib.A = basis.A;
  fib.b = b;
  fib.C = basis.order.C;
  std::vector<IntVec> pts;
  try {
    pts = brute_fiber(fib);
  } catch (const std::runtime_error&) {
    return true;  // unbounded fiber: not sampled
  }
  for (const auto& x : pts) {
    bool dominated = false;
    for (const auto& y : pts) {
      dominated = dominated || compare(basis.order, y, x) == OrderVerdict::Less;
    }
    if (!dominated) continue;
    bool improved = false;
    for (const auto& e : basis.elements) {
      if (dominates_componentwise(x, e.h) &&
          compare(basis.order, x - e.g, x) == OrderVerdict::Less) {
        improved = true;
        break;
      }
    }
    if (!improved) return false;
  }
  return true;
}

// Removing element `drop` either breaks the completion criterion or leaves
// some sampled fiber (those of the lead points A h) without property 3.
inline bool deletion_is_detected(const PGroebnerBasis& basis, std::size_t drop) {
  PGroebnerBasis smaller = basis;
  smaller.elements.erase(smaller.elements.begin() + static_cast<std::ptrdiff_t>(drop));
  if (!check_criterion(smaller).ok) return true;
  for (const auto& e : basis.elements) {
    if (!improving_moves_exist(smaller, basis.A * e.h)) return true;
  }
  return false;
}

}  // namespace moipgb::testkit

#endif  // MOIPGB_TESTS_SUPPORT_HPP
