#include "moipgb/pgroebner.hpp"

#include <algorithm>
#include <chrono>
#include <deque>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "moipgb/poset.hpp"

namespace moipgb {

namespace {

struct VecHash {
  std::size_t operator()(const IntVec& v) const {
    std::size_t h = v.size();
    for (const auto& x : v) {
      h ^= std::hash<long long>()(x.convert_to<long long>()) + 0x9e3779b97f4a7c15ULL + (h << 6) +
           (h >> 2);
    }
    return h;
  }
};

using VecSet = std::unordered_set<IntVec, VecHash>;
using ElementList = std::vector<const DirectedPair*>;

void check_budget(const VecSet& seen, const ReductionOptions& opt) {
  if (seen.size() > opt.max_states) {
    throw LimitExceeded("partial reduction visited more than " + std::to_string(opt.max_states) +
                        " states");
  }
}

// Every point reachable from `a` by applicable moves; the minimal ones are
// the remainders.
std::vector<IntVec> point_closure(const IntVec& a, const ElementList& elems,
                                  const PartialOrderSpec& spec, const ReductionOptions& opt) {
  VecSet seen{a};
  std::deque<IntVec> queue{a};
  while (!queue.empty()) {
    IntVec x = std::move(queue.front());
    queue.pop_front();
    for (const DirectedPair* e : elems) {
      if (!dominates_componentwise(x, e->h)) continue;
      IntVec y = x - e->g;
      if (seen.insert(y).second) {
        queue.push_back(std::move(y));
        check_budget(seen, opt);
      }
    }
  }
  return minimal_elements(spec, {seen.begin(), seen.end()});
}

// Closure over moves u (binomial x^{u+} - x^{u-}).  Returns {0} as soon as the
// zero move is reachable.  Otherwise the reductions end in terminal strongly
// connected components of the state graph: a single irreducible move, or a
// cycle of reducible ones that incomparable orientations can produce.  One
// move per component is kept, then the set is purged to minimal leads.
ReductionSet move_closure(const IntVec& u0, const ElementList& elems, const PartialOrderSpec& spec,
                          const ReductionOptions& opt) {
  if (is_zero(u0)) return {DirectedPair{u0, u0}};
  std::vector<IntVec> states{u0};
  std::unordered_map<IntVec, std::size_t, VecHash> index{{u0, 0}};
  std::vector<std::vector<std::size_t>> next(1);
  auto visit = [&](std::size_t from, IntVec v) {
    auto [it, fresh] = index.emplace(v, states.size());
    if (fresh) {
      states.push_back(std::move(v));
      next.emplace_back();
      if (states.size() > opt.max_states) {
        throw LimitExceeded("partial reduction visited more than " +
                            std::to_string(opt.max_states) + " states");
      }
    }
    next[from].push_back(it->second);
  };
  for (std::size_t k = 0; k < states.size(); ++k) {
    const IntVec u = states[k];
    const IntVec lead = positive_part(u);
    for (const DirectedPair* e : elems) {
      if (!dominates_componentwise(lead, e->h)) continue;
      IntVec v = u - e->g;
      if (is_zero(v)) return {DirectedPair{v, v}};
      switch (compare(spec, positive_part(v), negative_part(v))) {
        case OrderVerdict::Less:
          visit(k, -v);
          break;
        case OrderVerdict::Incomparable:
          visit(k, -v);
          visit(k, std::move(v));
          break;
        default:
          visit(k, std::move(v));
      }
    }
  }

  // Iterative Tarjan.
  const std::size_t n = states.size();
  constexpr std::size_t unset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> order(n, unset), low(n, 0), comp(n, unset);
  std::vector<bool> on_stack(n, false);
  std::vector<std::size_t> stack;
  std::vector<std::pair<std::size_t, std::size_t>> call;
  std::size_t counter = 0, ncomp = 0;
  for (std::size_t root = 0; root < n; ++root) {
    if (order[root] != unset) continue;
    call.emplace_back(root, 0);
    while (!call.empty()) {
      auto& [v, pos] = call.back();
      if (pos == 0) {
        order[v] = low[v] = counter++;
        stack.push_back(v);
        on_stack[v] = true;
      }
      if (pos < next[v].size()) {
        const std::size_t w = next[v][pos++];
        if (order[w] == unset) {
          call.emplace_back(w, 0);
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], order[w]);
        }
        continue;
      }
      if (low[v] == order[v]) {
        std::size_t w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          comp[w] = ncomp;
        } while (w != v);
        ++ncomp;
      }
      const std::size_t done = v;
      call.pop_back();
      if (!call.empty()) low[call.back().first] = std::min(low[call.back().first], low[done]);
    }
  }
  std::vector<bool> terminal(ncomp, true);
  std::vector<std::size_t> pick(ncomp, unset);
  for (std::size_t v = 0; v < n; ++v) {
    for (std::size_t w : next[v]) {
      if (comp[w] != comp[v]) terminal[comp[v]] = false;
    }
    std::size_t& p = pick[comp[v]];
    if (p == unset || states[v] < states[p]) p = v;
  }
  std::vector<IntVec> remainders;
  for (std::size_t c = 0; c < ncomp; ++c) {
    if (terminal[c]) remainders.push_back(states[pick[c]]);
  }

  std::vector<IntVec> leads, imgs;
  for (const auto& u : remainders) {
    leads.push_back(positive_part(u));
    imgs.push_back(order_image(spec, leads.back()));
  }
  ReductionSet out;
  for (std::size_t i = 0; i < remainders.size(); ++i) {
    bool dominated = false;
    for (std::size_t j = 0; j < remainders.size() && !dominated; ++j) {
      dominated = compare_imaged(spec, leads[j], imgs[j], leads[i], imgs[i]) == OrderVerdict::Less;
    }
    if (!dominated) out.push_back({remainders[i], leads[i]});
  }
  std::sort(out.begin(), out.end());
  return out;
}

ReductionSet closure(const DirectedPair& p, const ElementList& elems, const PartialOrderSpec& spec,
                     const ReductionOptions& opt) {
  if (p.is_zero_pair()) return {DirectedPair{p.g, p.g}};
  if (p.is_point()) {
    ReductionSet out;
    for (auto& x : point_closure(p.h, elems, spec, opt)) out.push_back(point_pair(x));
    return out;
  }
  return move_closure(p.g, elems, spec, opt);
}

ElementList all_elements(const std::vector<DirectedPair>& v) {
  ElementList out;
  out.reserve(v.size());
  for (const auto& e : v) out.push_back(&e);
  return out;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

std::ostream& operator<<(std::ostream& os, const DirectedPair& p) {
  return os << "g=" << p.g << " h=" << p.h;
}

DirectedPair point_pair(const IntVec& a) { return {a, a}; }

std::optional<DirectedPair> oriented_pair(const PartialOrderSpec& spec, const IntVec& g) {
  if (is_zero(g)) return std::nullopt;
  if (compare(spec, positive_part(g), negative_part(g)) == OrderVerdict::Less) {
    return DirectedPair{-g, negative_part(g)};
  }
  return DirectedPair{g, positive_part(g)};
}

std::vector<DirectedPair> phi(const PartialOrderSpec& spec, const IntVec& u, const IntVec& v) {
  std::vector<DirectedPair> out;
  for (const auto& w : setlm(spec, u, v)) {
    IntVec g = (w == u) ? u - v : v - u;
    if (is_zero(g)) continue;
    out.push_back({g, positive_part(g)});
  }
  return out;
}

bool is_zero_set(const ReductionSet& r) { return r.size() == 1 && r.front().is_zero_pair(); }

std::vector<std::vector<DirectedPair>> PGroebnerBasis::chains() const {
  return maximal_chains(order, elements, [](const DirectedPair& p) { return p.h; });
}

std::uint64_t PGroebnerBasis::chain_count() const {
  std::vector<IntVec> keys;
  for (const auto& e : elements) keys.push_back(e.h);
  return count_maximal_chains(order, keys);
}

PGroebnerBasis make_basis(const PartialOrderSpec& spec, const IntMat& A,
                          std::vector<DirectedPair> elements) {
  PGroebnerBasis b;
  b.order = spec;
  b.A = A;
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  b.elements = std::move(elements);
  return b;
}

ReductionSet preduce(const DirectedPair& p, const std::vector<DirectedPair>& chain,
                     const PartialOrderSpec& spec, const ReductionOptions& opt) {
  for (std::size_t i = 1; i < chain.size(); ++i) {
    if (compare(spec, chain[i].h, chain[i - 1].h) != OrderVerdict::Less) {
      throw InvalidInput("preduce: chain is not strictly decreasing at position " +
                         std::to_string(i));
    }
  }
  return closure(p, all_elements(chain), spec, opt);
}

ReductionSet prem(const DirectedPair& p, const PGroebnerBasis& basis, const ReductionOptions& opt) {
  return closure(p, all_elements(basis.elements), basis.order, opt);
}

ReductionSet prem_chains(const DirectedPair& p, const std::vector<std::vector<DirectedPair>>& chains,
                         const PartialOrderSpec& spec, const ReductionOptions& opt) {
  ElementList elems;
  for (const auto& c : chains) {
    for (const auto& e : c) elems.push_back(&e);
  }
  return closure(p, elems, spec, opt);
}

std::vector<IntVec> reduce_point(const IntVec& a, const PGroebnerBasis& basis,
                                 const ReductionOptions& opt) {
  if (is_zero(a)) return {a};
  return point_closure(a, all_elements(basis.elements), basis.order, opt);
}

SVectorPair svectors(const DirectedPair& p, const DirectedPair& q, const PartialOrderSpec& spec) {
  const IntVec gamma = componentwise_max(p.h, q.h);
  DirectedPair first{p.g - q.g, gamma - q.g};
  DirectedPair second{q.g - p.g, gamma - p.g};
  if (first.is_zero_pair()) {
    DirectedPair z{first.g, first.g};
    return {z, z};
  }
  switch (compare(spec, first.h, second.h)) {
    case OrderVerdict::Less:
      return {second, second};
    case OrderVerdict::Incomparable:
      return {first, second};
    default:
      return {first, first};
  }
}

namespace {

// Drops every element whose move the elements sharing a chain with it reduce
// to zero, bulkiest first so that short moves survive.  Elements on other
// chains do not count: an element may be redundant across chains and still
// stay.  Survivors keep their relative order.
std::vector<DirectedPair> prune(const std::vector<DirectedPair>& elems, const PartialOrderSpec& spec,
                                const ReductionOptions& opt) {
  std::vector<std::size_t> order(elems.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  auto weight = [](const DirectedPair& p) {
    Integer s = 0;
    for (const auto& x : p.g) s += x < 0 ? Integer(-x) : x;
    return s;
  };
  std::vector<Integer> w;
  for (const auto& e : elems) w.push_back(weight(e));
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (w[a] != w[b]) return w[a] > w[b];
    return elems[a] > elems[b];
  });
  std::vector<bool> keep(elems.size(), true);
  for (std::size_t i : order) {
    keep[i] = false;
    ElementList rest;
    for (std::size_t j = 0; j < elems.size(); ++j) {
      if (keep[j] && compare(spec, elems[i].h, elems[j].h) != OrderVerdict::Incomparable) {
        rest.push_back(&elems[j]);
      }
    }
    if (!is_zero_set(move_closure(elems[i].g, rest, spec, opt))) keep[i] = true;
  }
  std::vector<DirectedPair> out;
  for (std::size_t i = 0; i < elems.size(); ++i) {
    if (keep[i]) out.push_back(elems[i]);
  }
  return out;
}

}  // namespace

PGroebnerBasis pbuchberger(const IntMat& A, const std::vector<IntVec>& F1,
                           const std::vector<IntVec>& F2, const PartialOrderSpec& spec,
                           const CompletionOptions& opt) {
  const auto t0 = std::chrono::steady_clock::now();
  check_spec(spec);
  if (F1.size() != F2.size()) throw InvalidInput("pbuchberger: F1 and F2 differ in length");
  std::vector<DirectedPair> elems;
  std::set<DirectedPair> members;
  for (std::size_t i = 0; i < F1.size(); ++i) {
    if (!is_nonnegative(F1[i]) || !is_nonnegative(F2[i])) {
      throw InvalidInput("pbuchberger: generator " + std::to_string(i) + " is not nonnegative");
    }
    if (!is_zero(A * (F1[i] - F2[i]))) {
      throw InvalidInput("pbuchberger: generator " + std::to_string(i) + " is not in ker(A)");
    }
    for (auto& p : phi(spec, F1[i], F2[i])) {
      if (members.insert(p).second) elems.push_back(p);
    }
  }
  // The generators may already be complete, so reduce them up front too.
  elems = prune(elems, spec, opt.reduction);
  members = std::set<DirectedPair>(elems.begin(), elems.end());
  PGroebnerBasis out;
  out.certified = true;
  std::size_t checked = 0;
  for (;;) {
    ++out.steps;
    const ElementList snapshot = all_elements(elems);
    std::set<DirectedPair> additions;
    for (std::size_t j = checked; j < elems.size(); ++j) {
      for (std::size_t i = 0; i < j; ++i) {
        const SVectorPair s = svectors(elems[i], elems[j], spec);
        for (const DirectedPair* sk : {&s.s1, &s.s2}) {
          if (sk == &s.s2 && s.s2 == s.s1) continue;
          ReductionSet r = move_closure(sk->g, snapshot, spec, opt.reduction);
          if (is_zero_set(r)) continue;
          for (const auto& rem : r) {
            for (auto& p : phi(spec, rem.h, rem.tail())) {
              if (!members.count(p)) additions.insert(p);
            }
          }
        }
      }
    }
    if (additions.empty()) break;
    const std::size_t old_count = elems.size();
    for (const auto& p : additions) elems.push_back(p);
    // Keep the working set interreduced.  If a pair partner that was already
    // checked disappears, earlier verdicts no longer count and all pairs are
    // revisited.
    std::vector<DirectedPair> kept = prune(elems, spec, opt.reduction);
    std::size_t old_kept = 0;
    while (old_kept < kept.size() && old_kept < old_count && kept[old_kept] == elems[old_kept]) {
      ++old_kept;
    }
    checked = old_kept == old_count ? old_count : 0;
    elems = std::move(kept);
    members = std::set<DirectedPair>(elems.begin(), elems.end());
    out.last_growth_seconds = seconds_since(t0);
    if (opt.max_steps && out.steps >= *opt.max_steps) {
      out.certified = false;
      break;
    }
  }
  PGroebnerBasis reduced = make_basis(spec, A, std::move(elems));
  reduced.certified = out.certified;
  reduced.steps = out.steps;
  reduced.last_growth_seconds = out.last_growth_seconds;
  reduced.seconds = seconds_since(t0);
  return reduced;
}

PGroebnerBasis reduce_basis(PGroebnerBasis basis, const ReductionOptions& opt) {
  basis.elements = prune(basis.elements, basis.order, opt);
  std::sort(basis.elements.begin(), basis.elements.end());
  return basis;
}

CriterionReport check_criterion(const PGroebnerBasis& basis, const ReductionOptions& opt) {
  CriterionReport rep;
  const ElementList elems = all_elements(basis.elements);
  for (std::size_t j = 0; j < basis.elements.size(); ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      const SVectorPair s = svectors(basis.elements[i], basis.elements[j], basis.order);
      for (const DirectedPair* sk : {&s.s1, &s.s2}) {
        ReductionSet r = move_closure(sk->g, elems, basis.order, opt);
        if (is_zero_set(r)) continue;
        rep.ok = false;
        rep.first = basis.elements[i];
        rep.second = basis.elements[j];
        rep.witness = *sk;
        rep.remainder = std::move(r);
        return rep;
      }
    }
  }
  return rep;
}

}  // namespace moipgb
