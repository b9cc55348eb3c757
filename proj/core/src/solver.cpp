#include "moipgb/solver.hpp"

#include <algorithm>
#include <chrono>
#include <limits>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "moipgb/lattice.hpp"

namespace moipgb {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

// Pads the order to the columns added by with_bounds_as_constraints.
PartialOrderSpec lift_spec(const PartialOrderSpec& spec, const MoipInstance& inst,
                           const MoipInstance& work) {
  if (work.num_vars() == inst.num_vars()) return spec;
  PartialOrderSpec out = spec;
  out.C = work.C;
  if (!spec.priority.empty()) {
    std::vector<IntVec> rows = spec.priority.row_vectors();
    for (auto& r : rows) r.resize(work.num_vars(), Integer(0));
    out.priority = IntMat(std::move(rows));
  }
  // The bound slacks are u - x, so they stay out of the slack tie-break:
  // ranking on them would order points the original problem leaves apart.
  return out;
}

MoipInstance working_instance(const MoipInstance& inst) {
  require_valid(inst);
  return with_bounds_as_constraints(inst);
}

void finish(ParetoSet& ps, const MoipInstance& inst, std::vector<IntVec> points) {
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  for (const auto& x : points) {
    if (!is_feasible(inst, x)) {
      throw std::logic_error("internal error: returned point " + to_string(x) + " is infeasible");
    }
    ps.images.push_back(inst.C * x);
  }
  ps.solutions = std::move(points);
  ps.infeasible = ps.solutions.empty();
}

IntVec project(const IntVec& x, std::size_t offset, std::size_t n) {
  return IntVec(x.begin() + static_cast<std::ptrdiff_t>(offset),
                x.begin() + static_cast<std::ptrdiff_t>(offset + n));
}

void record_basis(ParetoSet& ps, const PGroebnerBasis& basis) {
  ps.basis_size = basis.size();
  ps.chain_count = basis.chain_count();
  ps.steps = basis.steps;
  ps.act_pgb = std::max(0.0, basis.seconds - basis.last_growth_seconds);
  ps.certified = basis.certified;
}

// Best-first walk from the extended start point, ordered by artificial mass,
// until a point with an empty artificial block turns up.  Basis moves never
// raise that block again, so the closure from there stays in the original
// fiber and already yields every minimal point.
std::optional<IntVec> descend_to_feasible(const IntVec& start, const PGroebnerBasis& basis,
                                          std::size_t width, const ReductionOptions& opt) {
  auto key = [&](const IntVec& y) {
    IntVec k{Integer(0)};
    for (std::size_t i = 0; i < width; ++i) k[0] += y[i];
    k.insert(k.end(), y.begin(), y.begin() + static_cast<std::ptrdiff_t>(width));
    k.insert(k.end(), y.begin() + static_cast<std::ptrdiff_t>(width), y.end());
    return k;
  };
  std::map<IntVec, IntVec> frontier{{key(start), start}};
  std::set<IntVec> seen{start};
  while (!frontier.empty()) {
    auto it = frontier.begin();
    IntVec y = std::move(it->second);
    frontier.erase(it);
    if (std::all_of(y.begin(), y.begin() + static_cast<std::ptrdiff_t>(width),
                    [](const Integer& v) { return v == 0; })) {
      return y;
    }
    for (const auto& e : basis.elements) {
      if (!dominates_componentwise(y, e.h)) continue;
      IntVec z = y - e.g;
      if (seen.insert(z).second) {
        if (seen.size() > opt.max_states) {
          throw LimitExceeded("descent visited more than " + std::to_string(opt.max_states) +
                              " states");
        }
        frontier.emplace(key(z), std::move(z));
      }
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<IntVec> derive_bounds(const MoipInstance& inst) {
  std::vector<std::optional<Integer>> known(inst.num_vars());
  if (inst.bounds) {
    for (std::size_t j = 0; j < known.size(); ++j) known[j] = (*inst.bounds)[j];
  }
  IntVec out;
  for (const auto& u : propagate_bounds(inst.A, inst.b, std::move(known))) {
    if (!u) return std::nullopt;
    out.push_back(*u);
  }
  return out;
}

IntVec require_bounds(const MoipInstance& inst) {
  auto b = derive_bounds(inst);
  if (!b) {
    throw UnboundedRegion(
        "cannot derive finite variable bounds from the constraints; supply \"bounds\"");
  }
  return *b;
}

std::vector<IntVec> enumerate_fiber(const MoipInstance& inst, const IntVec& bounds,
                                    std::size_t limit) {
  const std::size_t m = inst.num_constraints();
  const std::size_t n = inst.num_vars();
  const Integer cap = Integer(1) << 60;
  auto small = [&](const Integer& x) { return x < cap && x > -cap; };
  Integer worst = 0;
  for (std::size_t i = 0; i < m; ++i) {
    Integer row = inst.b[i] < 0 ? Integer(-inst.b[i]) : inst.b[i];
    for (std::size_t j = 0; j < n; ++j) {
      const Integer& a = inst.A(i, j);
      row += (a < 0 ? Integer(-a) : a) * bounds[j];
    }
    worst = std::max(worst, row);
  }
  if (!small(worst)) throw LimitExceeded("fiber enumeration: values exceed 64-bit range");
  using ll = long long;
  std::vector<std::vector<ll>> A(m, std::vector<ll>(n));
  std::vector<ll> ub(n), r(m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) A[i][j] = inst.A(i, j).convert_to<ll>();
    r[i] = inst.b[i].convert_to<ll>();
  }
  for (std::size_t j = 0; j < n; ++j) ub[j] = bounds[j].convert_to<ll>();
  // lo[j][i], hi[j][i]: range of sum_{k >= j} a_ik x_k over the box.
  std::vector<std::vector<ll>> lo(n + 1, std::vector<ll>(m, 0)), hi = lo;
  for (std::size_t j = n; j-- > 0;) {
    for (std::size_t i = 0; i < m; ++i) {
      ll t = A[i][j] * ub[j];
      lo[j][i] = lo[j + 1][i] + std::min<ll>(0, t);
      hi[j][i] = hi[j + 1][i] + std::max<ll>(0, t);
    }
  }
  std::vector<IntVec> out;
  std::vector<ll> x(n, 0);
  std::size_t visited = 0;
  auto dfs = [&](auto&& self, std::size_t j) -> void {
    for (std::size_t i = 0; i < m; ++i) {
      if (r[i] < lo[j][i] || r[i] > hi[j][i]) return;
    }
    if (++visited > limit) throw LimitExceeded("fiber enumeration exceeded its node budget");
    if (j == n) {
      IntVec v;
      v.reserve(n);
      for (ll e : x) v.emplace_back(e);
      out.push_back(std::move(v));
      return;
    }
    for (ll v = 0; v <= ub[j]; ++v) {
      x[j] = v;
      for (std::size_t i = 0; i < m; ++i) r[i] -= A[i][j] * v;
      self(self, j + 1);
      for (std::size_t i = 0; i < m; ++i) r[i] += A[i][j] * v;
    }
    x[j] = 0;
  };
  dfs(dfs, 0);
  return out;
}

std::optional<IntVec> initial_feasible(const MoipInstance& inst) {
  require_valid(inst);
  const std::size_t n = inst.num_vars();
  if (is_zero(inst.b)) return zeros(n);
  std::optional<IntVec> x0 = integer_solution(inst.A, inst.b);
  if (!x0) return std::nullopt;
  if (is_feasible(inst, *x0)) return x0;
  const std::vector<IntVec> K = lll_reduce(kernel_basis(inst.A));
  if (K.empty()) return std::nullopt;
  // Shells of growing radius in coefficient space around the particular solution.
  const std::size_t d = K.size();
  for (long long R = 1;; ++R) {
    double boxes = 1;
    for (std::size_t i = 0; i < d; ++i) boxes *= static_cast<double>(2 * R + 1);
    if (boxes > 200000) break;
    std::vector<long long> c(d, -R);
    for (;;) {
      bool shell = std::any_of(c.begin(), c.end(), [&](long long v) { return v == R || v == -R; });
      if (shell) {
        IntVec x = *x0;
        for (std::size_t i = 0; i < d; ++i) {
          if (c[i] != 0) x += Integer(c[i]) * K[i];
        }
        if (is_feasible(inst, x)) return x;
      }
      std::size_t i = 0;
      while (i < d && c[i] == R) c[i++] = -R;
      if (i == d) break;
      ++c[i];
    }
  }
  const IntVec bounds = require_bounds(inst);
  const std::vector<IntVec> pts = enumerate_fiber(inst, bounds);
  if (pts.empty()) return std::nullopt;
  return pts.front();
}

PartialOrderSpec effective_spec(const MoipInstance& inst, OrderVariant requested) {
  PartialOrderSpec spec;
  spec.C = inst.C;
  spec.variant = requested;
  if (requested == OrderVariant::Plain && !inst.slack_indices.empty()) {
    spec.variant = OrderVariant::SlackRefined;
  }
  if (spec.variant == OrderVariant::SlackRefined) {
    spec.slack_indices = inst.slack_indices;
    try {
      check_spec(spec);
    } catch (const InvalidInput&) {
      if (requested == OrderVariant::SlackRefined) throw;
      spec.variant = OrderVariant::Plain;
      spec.slack_indices.clear();
    }
  }
  return spec;
}

const char* to_string(Pipeline p) {
  switch (p) {
    case Pipeline::Auto:
      return "auto";
    case Pipeline::HostenSturmfels:
      return "hs";
    case Pipeline::ContiTraverso:
      return "ct";
    case Pipeline::Corank1:
      return "corank1";
  }
  return "?";
}

PGroebnerBasis compute_basis(const MoipInstance& inst, const PartialOrderSpec& spec,
                             const SolveOptions& opt, StageTimes* times) {
  const MoipInstance work = working_instance(inst);
  auto t = Clock::now();
  const GeneratorSet gens = set_of_generators(work.A);
  if (times) times->sog = seconds_since(t);
  t = Clock::now();
  PGroebnerBasis basis = basis_from_generators(inst, spec, gens, opt);
  if (times) times->pgroebner = seconds_since(t);
  return basis;
}

PGroebnerBasis basis_from_generators(const MoipInstance& inst, const PartialOrderSpec& spec,
                                     const GeneratorSet& gens, const SolveOptions& opt) {
  const MoipInstance work = working_instance(inst);
  std::vector<IntVec> F1, F2;
  for (const auto& b : gens) {
    F1.push_back(b.plus);
    F2.push_back(b.minus);
  }
  CompletionOptions copt;
  copt.max_steps = opt.max_steps;
  copt.reduction = opt.reduction;
  return pbuchberger(work.A, F1, F2, lift_spec(spec, inst, work), copt);
}

IntMat working_matrix(const MoipInstance& inst) { return working_instance(inst).A; }

ParetoSet solve_with_basis(const MoipInstance& inst, const PGroebnerBasis& basis,
                           const SolveOptions& opt) {
  const auto t0 = Clock::now();
  const MoipInstance work = working_instance(inst);
  if (!(work.A == basis.A)) throw InvalidInput("basis was computed for a different matrix");
  ParetoSet ps;
  ps.provenance = "hosten-sturmfels";
  record_basis(ps, basis);
  std::optional<IntVec> alpha = initial_feasible(work);
  if (!alpha) {
    ps.infeasible = true;
    ps.times.pos = ps.times.total = seconds_since(t0);
    return ps;
  }
  std::vector<IntVec> pts;
  for (const auto& y : reduce_point(*alpha, basis, opt.reduction)) {
    pts.push_back(project(y, 0, inst.num_vars()));
  }
  finish(ps, inst, std::move(pts));
  ps.times.pos = ps.times.total = seconds_since(t0);
  return ps;
}

ParetoSet solve_hosten_sturmfels(const MoipInstance& inst, const PartialOrderSpec& spec,
                                 const SolveOptions& opt) {
  const auto t0 = Clock::now();
  check_spec(spec);
  const MoipInstance work = working_instance(inst);
  ParetoSet ps;
  ps.provenance = "hosten-sturmfels";
  std::optional<IntVec> alpha = initial_feasible(work);
  if (!alpha) {
    ps.infeasible = true;
    ps.times.total = seconds_since(t0);
    return ps;
  }
  StageTimes times;
  const PGroebnerBasis basis = compute_basis(inst, spec, opt, &times);
  record_basis(ps, basis);
  const auto t = Clock::now();
  std::vector<IntVec> pts;
  for (const auto& y : reduce_point(*alpha, basis, opt.reduction)) {
    pts.push_back(project(y, 0, inst.num_vars()));
  }
  finish(ps, inst, std::move(pts));
  ps.times = times;
  ps.times.pos = seconds_since(t);
  ps.times.total = seconds_since(t0);
  return ps;
}

ExtendedInstance extend_instance(const MoipInstance& inst, const PartialOrderSpec& spec) {
  const MoipInstance work = working_instance(inst);
  const PartialOrderSpec wspec = lift_spec(spec, inst, work);
  const std::size_t m = work.num_constraints();
  const std::size_t n = work.num_vars();
  const std::size_t N = m + 1 + n;
  ExtendedInstance ext;
  ext.base = work;
  std::vector<IntVec> rows;
  for (std::size_t i = 0; i < m; ++i) {
    IntVec r = zeros(N);
    r[i] = 1;
    r[m] = -1;
    for (std::size_t j = 0; j < n; ++j) r[m + 1 + j] = work.A(i, j);
    rows.push_back(std::move(r));
  }
  ext.A = IntMat(std::move(rows));
  std::vector<IntVec> crow;
  for (std::size_t k = 0; k < work.num_objectives(); ++k) {
    IntVec r = zeros(N);
    for (std::size_t j = 0; j < n; ++j) r[m + 1 + j] = wspec.C(k, j);
    crow.push_back(std::move(r));
  }
  ext.spec.C = IntMat(std::move(crow));
  ext.spec.variant = wspec.variant;
  for (std::size_t s : wspec.slack_indices) ext.spec.slack_indices.insert(m + 1 + s);
  IntVec prio = zeros(N);
  for (std::size_t i = 0; i <= m; ++i) prio[i] = 1;
  std::vector<IntVec> prows{prio};
  if (!wspec.priority.empty()) {
    for (const auto& r : wspec.priority.row_vectors()) {
      IntVec e = zeros(N);
      for (std::size_t j = 0; j < n; ++j) e[m + 1 + j] = r[j];
      prows.push_back(std::move(e));
    }
  }
  ext.spec.priority = IntMat(std::move(prows));
  // Without this every redistribution of the artificial mass is a tie and the
  // partial reductions branch on it.  Feasible points have a zero artificial
  // block, so their mutual order is unchanged.
  for (std::size_t i = 0; i <= m; ++i) ext.spec.tiebreak.push_back(i);
  for (std::size_t t : wspec.tiebreak) ext.spec.tiebreak.push_back(m + 1 + t);
  IntVec M0 = zeros(N);
  for (std::size_t i = 0; i <= m; ++i) M0[i] = 1;
  ext.F1.push_back(M0);
  ext.F2.push_back(zeros(N));
  for (std::size_t j = 0; j < n; ++j) {
    Integer lo = 0;
    for (std::size_t i = 0; i < m; ++i) lo = std::min(lo, work.A(i, j));
    IntVec M = zeros(N);
    for (std::size_t i = 0; i < m; ++i) M[i] = work.A(i, j) - lo;
    M[m] = -lo;
    IntVec P = zeros(N);
    P[m + 1 + j] = 1;
    ext.F1.push_back(std::move(M));
    ext.F2.push_back(std::move(P));
  }
  ext.start = zeros(N);
  for (std::size_t i = 0; i < m; ++i) ext.start[i] = work.b[i];
  return ext;
}

ParetoSet solve_conti_traverso(const MoipInstance& inst, const PartialOrderSpec& spec,
                               const SolveOptions& opt) {
  const auto t0 = Clock::now();
  check_spec(spec);
  const ExtendedInstance ext = extend_instance(inst, spec);
  const std::size_t m = ext.base.num_constraints();
  ParetoSet ps;
  ps.provenance = "conti-traverso";
  CompletionOptions copt;
  copt.max_steps = opt.max_steps;
  copt.reduction = opt.reduction;
  auto t = Clock::now();
  const PGroebnerBasis basis = pbuchberger(ext.A, ext.F1, ext.F2, ext.spec, copt);
  ps.times.pgroebner = seconds_since(t);
  record_basis(ps, basis);
  t = Clock::now();
  std::vector<IntVec> pts;
  if (auto y0 = descend_to_feasible(ext.start, basis, m + 1, opt.reduction)) {
    for (const auto& y : reduce_point(*y0, basis, opt.reduction)) {
      pts.push_back(project(y, m + 1, inst.num_vars()));
    }
  }
  finish(ps, inst, std::move(pts));
  ps.times.pos = seconds_since(t);
  ps.times.total = seconds_since(t0);
  return ps;
}

ParetoSet solve_corank1(const MoipInstance& inst, const PartialOrderSpec& spec) {
  const auto t0 = Clock::now();
  check_spec(spec);
  const MoipInstance work = working_instance(inst);
  const PartialOrderSpec wspec = lift_spec(spec, inst, work);
  if (rank(work.A) + 1 != work.num_vars()) {
    throw InvalidInput("corank-1 pipeline needs rank(A) = n - 1");
  }
  ParetoSet ps;
  ps.provenance = "corank1";
  auto t = Clock::now();
  const IntVec g = kernel_basis(work.A).front();
  ps.times.sog = seconds_since(t);
  std::optional<IntVec> alpha = initial_feasible(work);
  if (!alpha) {
    ps.infeasible = true;
    ps.times.total = seconds_since(t0);
    return ps;
  }
  if (is_nonnegative(g) || is_nonnegative(-g)) {
    throw UnboundedRegion("the kernel direction is sign-constant; the fiber is unbounded");
  }
  t = Clock::now();
  std::vector<IntVec> line{*alpha};
  for (IntVec x = *alpha - g; is_nonnegative(x); x -= g) line.push_back(x);
  for (IntVec x = *alpha + g; is_nonnegative(x); x += g) line.push_back(x);
  std::vector<IntVec> pts;
  for (const auto& y : minimal_elements(wspec, std::move(line))) {
    pts.push_back(project(y, 0, inst.num_vars()));
  }
  finish(ps, inst, std::move(pts));
  ps.basis_size = 1;
  ps.chain_count = 1;
  ps.steps = 1;
  ps.times.pos = seconds_since(t);
  ps.times.total = seconds_since(t0);
  return ps;
}

ParetoSet solve(const MoipInstance& inst, const PartialOrderSpec& spec, const SolveOptions& opt) {
  switch (opt.pipeline) {
    case Pipeline::HostenSturmfels:
      return solve_hosten_sturmfels(inst, spec, opt);
    case Pipeline::ContiTraverso:
      return solve_conti_traverso(inst, spec, opt);
    case Pipeline::Corank1:
      return solve_corank1(inst, spec);
    case Pipeline::Auto:
      break;
  }
  const MoipInstance work = working_instance(inst);
  if (rank(work.A) + 1 == work.num_vars()) {
    const IntVec g = kernel_basis(work.A).front();
    if (!is_nonnegative(g) && !is_nonnegative(-g)) return solve_corank1(inst, spec);
  }
  return solve_hosten_sturmfels(inst, spec, opt);
}

ParetoSet solve(const MoipInstance& inst, OrderVariant variant, const SolveOptions& opt) {
  return solve(inst, effective_spec(inst, variant), opt);
}

ParetoSet oracle_pareto(const MoipInstance& inst, const PartialOrderSpec& spec, bool quotient) {
  const auto t0 = Clock::now();
  require_valid(inst);
  check_spec(spec);
  ParetoSet ps;
  ps.provenance = "oracle";
  std::vector<IntVec> pts = minimal_elements(spec, enumerate_fiber(inst, require_bounds(inst)));
  if (quotient) {
    std::map<IntVec, IntVec> rep;
    for (const auto& x : pts) rep.emplace(inst.C * x, x);  // pts ascending: first is lex-smallest
    pts.clear();
    for (auto& [img, x] : rep) pts.push_back(x);
  }
  finish(ps, inst, std::move(pts));
  ps.times.pos = ps.times.total = seconds_since(t0);
  return ps;
}

std::vector<std::size_t> FiberSkeleton::sinks() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < sink.size(); ++i) {
    if (sink[i]) out.push_back(i);
  }
  return out;
}

FiberSkeleton fiber_skeleton(const MoipInstance& inst, const PGroebnerBasis& basis) {
  require_valid(inst);
  // A basis computed with the bounds as extra rows walks the widened fiber;
  // node labels are projected back afterwards.
  MoipInstance space = inst;
  if (!basis.empty() && basis.elements.front().g.size() != inst.num_vars()) {
    space = with_bounds_as_constraints(inst);
    if (basis.elements.front().g.size() != space.num_vars()) {
      throw InvalidInput("basis dimension differs from the instance");
    }
  }
  FiberSkeleton sk;
  sk.nodes = enumerate_fiber(space, require_bounds(space));
  std::map<IntVec, std::size_t> index;
  for (std::size_t i = 0; i < sk.nodes.size(); ++i) index.emplace(sk.nodes[i], i);
  sk.sink.assign(sk.nodes.size(), true);
  for (std::size_t i = 0; i < sk.nodes.size(); ++i) {
    const IntVec& x = sk.nodes[i];
    for (std::size_t e = 0; e < basis.elements.size(); ++e) {
      const DirectedPair& p = basis.elements[e];
      if (!dominates_componentwise(x, p.h)) continue;
      auto it = index.find(x - p.g);
      if (it == index.end()) continue;
      bool improving = compare(basis.order, it->first, x) == OrderVerdict::Less;
      sk.edges.push_back({i, it->second, e, improving});
      if (improving) sk.sink[i] = false;
    }
  }
  for (auto& x : sk.nodes) x.resize(inst.num_vars());
  return sk;
}

std::string to_dot(const FiberSkeleton& sk) {
  std::ostringstream os;
  os << "digraph skeleton {\n";
  for (std::size_t i = 0; i < sk.nodes.size(); ++i) {
    os << "  n" << i << " [label=\"" << sk.nodes[i] << "\"";
    if (sk.sink[i]) os << ", style=bold";
    os << "];\n";
  }
  for (const auto& e : sk.edges) {
    os << "  n" << e.from << " -> n" << e.to << " [label=\"g" << e.element << "\"";
    if (!e.improving) os << ", style=dashed";
    os << "];\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace moipgb
