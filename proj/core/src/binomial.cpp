#include "moipgb/binomial.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <tuple>

#include "moipgb/lattice.hpp"

namespace moipgb {

TermOrder TermOrder::graded(std::size_t n, std::size_t cheapest) {
  return {IntVec(n, Integer(1)), cheapest};
}

TermOrder TermOrder::weighted(IntVec weights, std::size_t cheapest) {
  return {std::move(weights), cheapest};
}

std::strong_ordering term_compare(const TermOrder& ord, const IntVec& a, const IntVec& b) {
  const Integer da = dot(ord.weights, a);
  const Integer db = dot(ord.weights, b);
  if (da != db) return da < db ? std::strong_ordering::less : std::strong_ordering::greater;
  // Walk from the revlex-last variable backwards through the priority list.
  const std::size_t n = a.size();
  for (std::size_t step = 0; step < n; ++step) {
    const std::size_t j = (ord.cheapest + n - step) % n;
    if (a[j] != b[j]) {
      return a[j] > b[j] ? std::strong_ordering::less : std::strong_ordering::greater;
    }
  }
  return std::strong_ordering::equal;
}

Binomial make_binomial(const TermOrder& ord, const IntVec& u, const IntVec& v) {
  if (term_compare(ord, u, v) == std::strong_ordering::less) return {v, u};
  return {u, v};
}

namespace {

bool is_zero_binomial(const Binomial& f) { return f.plus == f.minus; }

bool coprime(const IntVec& a, const IntVec& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != 0 && b[i] != 0) return false;
  }
  return true;
}

// One division step of x^t by g: t - plus + minus.
IntVec divide_step(const IntVec& t, const Binomial& g) { return t - g.plus + g.minus; }

const Binomial* find_divisor(const std::vector<Binomial>& gb, const IntVec& t,
                             const Binomial* skip = nullptr) {
  for (const auto& g : gb) {
    if (&g != skip && dominates_componentwise(t, g.plus)) return &g;
  }
  return nullptr;
}

Binomial reduce_lead(const TermOrder& ord, const std::vector<Binomial>& gb, Binomial f) {
  while (!is_zero_binomial(f)) {
    const Binomial* g = find_divisor(gb, f.plus);
    if (!g) break;
    f = make_binomial(ord, divide_step(f.plus, *g), f.minus);
  }
  return f;
}

}  // namespace

IntVec normal_form(const std::vector<Binomial>& gb, const IntVec& u) {
  IntVec t = u;
  while (const Binomial* g = find_divisor(gb, t)) t = divide_step(t, *g);
  return t;
}

std::vector<Binomial> buchberger_total(const std::vector<Binomial>& gens, const TermOrder& ord) {
  std::vector<Binomial> G;
  for (const auto& f : gens) {
    Binomial b = make_binomial(ord, f.plus, f.minus);
    if (!is_zero_binomial(b) && std::find(G.begin(), G.end(), b) == G.end()) G.push_back(b);
  }
  // Critical pairs ordered by weighted degree of the lcm, then by index.
  std::set<std::tuple<Integer, std::size_t, std::size_t>> queue;
  auto enqueue = [&](std::size_t i, std::size_t j) {
    if (coprime(G[i].plus, G[j].plus)) return;
    queue.emplace(dot(ord.weights, componentwise_max(G[i].plus, G[j].plus)), i, j);
  };
  for (std::size_t j = 0; j < G.size(); ++j) {
    for (std::size_t i = 0; i < j; ++i) enqueue(i, j);
  }
  while (!queue.empty()) {
    auto [deg, i, j] = *queue.begin();
    queue.erase(queue.begin());
    const IntVec L = componentwise_max(G[i].plus, G[j].plus);
    Binomial s = make_binomial(ord, divide_step(L, G[i]), divide_step(L, G[j]));
    if (is_zero_binomial(s)) continue;
    s = reduce_lead(ord, G, std::move(s));
    if (is_zero_binomial(s)) continue;
    G.push_back(std::move(s));
    for (std::size_t k = 0; k + 1 < G.size(); ++k) enqueue(k, G.size() - 1);
  }

  // Minimal basis: drop elements whose leading term is a multiple of another's.
  std::vector<Binomial> M;
  for (std::size_t i = 0; i < G.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < G.size() && !redundant; ++j) {
      if (i == j || !dominates_componentwise(G[i].plus, G[j].plus)) continue;
      redundant = G[i].plus != G[j].plus || j < i;
    }
    if (!redundant) M.push_back(G[i]);
  }
  // Tail reduction.
  std::vector<Binomial> R;
  for (std::size_t i = 0; i < M.size(); ++i) {
    Binomial f = M[i];
    while (const Binomial* g = find_divisor(M, f.minus, &M[i])) f.minus = divide_step(f.minus, *g);
    R.push_back(std::move(f));
  }
  std::sort(R.begin(), R.end());
  return R;
}

std::vector<Binomial> saturate_variable(const std::vector<Binomial>& gb, std::size_t i) {
  std::vector<Binomial> out = gb;
  for (auto& f : out) {
    Integer c = std::min(f.plus[i], f.minus[i]);
    f.plus[i] -= c;
    f.minus[i] -= c;
  }
  return out;
}

std::optional<IntVec> row_space_weight(const IntMat& A) {
  const std::size_t m = A.rows();
  const std::size_t n = A.cols();
  if (m == 0) return std::nullopt;
  std::vector<IntVec> cols;
  for (std::size_t j = 0; j < n; ++j) cols.push_back(A.column(j));
  IntVec y = zeros(m);
  // Perceptron updates: converge whenever some y gives A^T y > 0.
  const std::size_t cap = 20000 + 200 * n;
  for (std::size_t it = 0; it < cap; ++it) {
    bool ok = true;
    for (std::size_t j = 0; j < n; ++j) {
      if (dot(cols[j], y) <= 0) {
        y += cols[j];
        ok = false;
        break;
      }
    }
    if (ok) {
      IntVec w = A.transposed() * y;
      Integer g = 0;
      for (const auto& x : w) g = boost::multiprecision::gcd(g, x);
      for (auto& x : w) x /= g;
      return w;
    }
  }
  return std::nullopt;
}

GeneratorSet set_of_generators(const IntMat& A) {
  const std::size_t n = A.cols();
  std::vector<IntVec> basis = lll_reduce(kernel_basis(A));
  if (basis.empty()) return {};
  IntVec w = row_space_weight(A).value_or(IntVec(n, Integer(1)));
  std::vector<Binomial> J;
  for (const auto& u : basis) J.push_back({positive_part(u), negative_part(u)});
  for (std::size_t i = 0; i < n; ++i) {
    J = saturate_variable(buchberger_total(J, TermOrder::weighted(w, i)), i);
  }
  // The toric ideal is saturated, so every common monomial factor cancels.
  std::set<Binomial> out;
  for (const auto& f : J) {
    IntVec u = f.plus - f.minus;
    if (is_zero(u)) continue;
    Binomial b = make_binomial(TermOrder::weighted(w, n - 1), positive_part(u), negative_part(u));
    out.insert(b);
  }
  return {out.begin(), out.end()};
}

}  // namespace moipgb
