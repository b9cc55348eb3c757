#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "moipgb/binomial.hpp"
#include "moipgb/lattice.hpp"
#include "support.hpp"

using namespace moipgb;

namespace {

// Reference comparison written from the definition: weighted degree, then the
// first differing exponent scanning cheapest, cheapest-1, ..., 0, n-1, ...;
// the larger exponent there makes the smaller term.
int reference_compare(const TermOrder& ord, const IntVec& a, const IntVec& b) {
  Integer da = dot(ord.weights, a), db = dot(ord.weights, b);
  if (da != db) return da < db ? -1 : 1;
  const std::size_t n = a.size();
  for (std::size_t step = 0; step < n; ++step) {
    const std::size_t j = (ord.cheapest + n - step) % n;
    if (a[j] != b[j]) return a[j] > b[j] ? -1 : 1;
  }
  return 0;
}

std::vector<IntVec> small_terms(std::size_t n, long long top) {
  std::vector<IntVec> out{IntVec{}};
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<IntVec> next;
    for (const auto& p : out) {
      for (long long t = 0; t <= top; ++t) {
        IntVec q = p;
        q.emplace_back(t);
        next.push_back(q);
      }
    }
    out = next;
  }
  return out;
}

}  // namespace

TEST(TermOrder, MatchesReferenceExhaustively) {
  for (std::size_t cheapest = 0; cheapest < 3; ++cheapest) {
    for (const TermOrder& ord :
         {TermOrder::graded(3, cheapest), TermOrder::weighted(make_vec({1, 2, 1}), cheapest)}) {
      const auto terms = small_terms(3, 2);
      for (const auto& a : terms) {
        for (const auto& b : terms) {
          const auto got = term_compare(ord, a, b);
          const int want = reference_compare(ord, a, b);
          EXPECT_EQ(got < 0, want < 0);
          EXPECT_EQ(got == 0, want == 0);
        }
      }
    }
  }
}

TEST(TermOrder, IsMultiplicative) {
  TermOrder ord = TermOrder::graded(3, 1);
  const auto terms = small_terms(3, 2);
  const IntVec c = make_vec({1, 0, 2});
  for (const auto& a : terms) {
    for (const auto& b : terms) {
      EXPECT_EQ(term_compare(ord, a, b), term_compare(ord, a + c, b + c));
    }
  }
}

TEST(Generators, Example4MatchesTheToricIdeal) {
  GeneratorSet gens = set_of_generators(testkit::example4().A);
  std::set<std::pair<IntVec, IntVec>> got;
  for (const auto& g : gens) {
    // Orientation is free; compare unordered pairs.
    got.insert(std::minmax(g.plus, g.minus));
  }
  std::set<std::pair<IntVec, IntVec>> want{
      std::minmax(make_vec({1, 0, 0, 2, 0}), make_vec({0, 1, 0, 0, 1})),
      std::minmax(make_vec({1, 0, 2, 0, 0}), make_vec({0, 0, 0, 0, 1})),
      std::minmax(make_vec({0, 1, 2, 0, 0}), make_vec({0, 0, 0, 2, 0}))};
  EXPECT_EQ(got, want);
}

// The generators connect every fiber: breadth-first search along +-moves
// from one point reaches all of them.
TEST(Generators, ConnectFibers) {
  for (std::uint64_t seed = 0; seed < 16; ++seed) {
    MoipInstance inst = testkit::random_instance(seed);
    MoipInstance work = with_bounds_as_constraints(inst);
    GeneratorSet gens = set_of_generators(work.A);
    for (const auto& g : gens) {
      EXPECT_TRUE(is_zero(work.A * g.move()));
      EXPECT_TRUE(is_nonnegative(g.plus) && is_nonnegative(g.minus));
    }
    std::vector<IntVec> fiber = testkit::brute_fiber(work);
    if (fiber.empty()) continue;
    std::set<IntVec> all(fiber.begin(), fiber.end()), seen{fiber.front()};
    std::vector<IntVec> stack{fiber.front()};
    while (!stack.empty()) {
      IntVec x = stack.back();
      stack.pop_back();
      for (const auto& g : gens) {
        for (const IntVec& y : {x - g.move(), x + g.move()}) {
          if (all.count(y) && seen.insert(y).second) stack.push_back(y);
        }
      }
    }
    EXPECT_EQ(seen.size(), all.size()) << "seed " << seed;
  }
}

// A Groebner basis under a term order sends every point of a fiber to the
// order-minimal point of that fiber.
TEST(Buchberger, NormalFormIsFiberMinimum) {
  for (std::uint64_t seed = 0; seed < 16; ++seed) {
    MoipInstance work = with_bounds_as_constraints(testkit::random_instance(seed));
    const std::size_t n = work.num_vars();
    TermOrder ord = TermOrder::graded(n, seed % n);
    std::vector<Binomial> gens;
    for (const auto& g : set_of_generators(work.A)) gens.push_back(make_binomial(ord, g.plus, g.minus));
    auto gb = buchberger_total(gens, ord);
    std::vector<IntVec> fiber = testkit::brute_fiber(work);
    if (fiber.empty()) continue;
    IntVec best = fiber.front();
    for (const auto& x : fiber) {
      if (term_compare(ord, x, best) < 0) best = x;
    }
    for (const auto& x : fiber) EXPECT_EQ(normal_form(gb, x), best) << "seed " << seed;
  }
}

TEST(Buchberger, InputOrderInvariant) {
  std::mt19937_64 rng(11);
  for (std::uint64_t seed = 0; seed < 12; ++seed) {
    MoipInstance work = with_bounds_as_constraints(testkit::random_instance(seed));
    TermOrder ord = TermOrder::graded(work.num_vars(), 0);
    std::vector<Binomial> gens;
    for (const auto& g : set_of_generators(work.A)) gens.push_back(make_binomial(ord, g.plus, g.minus));
    auto ref = buchberger_total(gens, ord);
    for (int t = 0; t < 5; ++t) {
      std::shuffle(gens.begin(), gens.end(), rng);
      EXPECT_EQ(buchberger_total(gens, ord), ref);
    }
  }
}

TEST(Buchberger, SaturationRemovesCommonFactors) {
  TermOrder ord = TermOrder::graded(3, 0);
  std::vector<Binomial> gb{{make_vec({2, 1, 0}), make_vec({1, 0, 1})}};
  auto sat = saturate_variable(gb, 0);
  ASSERT_EQ(sat.size(), 1u);
  EXPECT_EQ(sat[0].plus, make_vec({1, 1, 0}));
  EXPECT_EQ(sat[0].minus, make_vec({0, 0, 1}));
}

TEST(Generators, RowSpaceWeightIsPositive) {
  auto w = row_space_weight(testkit::example4().A);
  ASSERT_TRUE(w.has_value());
  for (const auto& x : *w) EXPECT_GT(x, 0);
  for (const auto& k : kernel_basis(testkit::example4().A)) EXPECT_EQ(dot(*w, k), 0);
}
