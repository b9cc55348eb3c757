#include <gtest/gtest.h>

#include <random>

#include "moipgb/order.hpp"
#include "moipgb/poset.hpp"

using namespace moipgb;

namespace {

std::vector<IntVec> grid(std::size_t n, long long top) {
  std::vector<IntVec> pts{IntVec{}};
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<IntVec> next;
    for (const auto& p : pts) {
      for (long long t = 0; t <= top; ++t) {
        IntVec q = p;
        q.emplace_back(t);
        next.push_back(std::move(q));
      }
    }
    pts = std::move(next);
  }
  return pts;
}

const PartialOrderSpec kEx1 = PartialOrderSpec::plain(IntMat{{2, 1}, {3, 5}});

Triplet tri(std::initializer_list<long long> u, std::initializer_list<long long> v,
            std::initializer_list<long long> w) {
  return {make_vec(u), make_vec(v), make_vec(w)};
}

}  // namespace

// Strict partial order axioms and translation invariance, checked exhaustively
// on a small grid for every variant.
TEST(Order, AxiomsOnGrid) {
  IntMat C{{1, 0, 2}, {0, 1, 0}};
  std::vector<PartialOrderSpec> specs{PartialOrderSpec::plain(C), PartialOrderSpec::lex(C),
                                      PartialOrderSpec::slack(C, {1})};
  specs[2].C = IntMat{{1, 0, 2}, {0, 0, 1}};
  const auto pts = grid(3, 2);
  for (const auto& spec : specs) {
    for (const auto& x : pts) {
      EXPECT_EQ(compare(spec, x, x), OrderVerdict::Equal);
      for (const auto& y : pts) {
        const OrderVerdict v = compare(spec, x, y);
        EXPECT_EQ(compare(spec, y, x), flip(v));
        if (x != y) EXPECT_NE(v, OrderVerdict::Equal);
        const IntVec shift = make_vec({1, 2, 0});
        EXPECT_EQ(compare(spec, x + shift, y + shift), v);
        if (v != OrderVerdict::Less) continue;
        for (const auto& z : pts) {
          if (compare(spec, y, z) == OrderVerdict::Less) {
            EXPECT_EQ(compare(spec, x, z), OrderVerdict::Less);
          }
        }
      }
    }
  }
}

TEST(Order, PlainLeavesEqualImagesIncomparable) {
  auto spec = PartialOrderSpec::plain(IntMat{{1, 1}});
  EXPECT_EQ(compare(spec, make_vec({1, 0}), make_vec({0, 1})), OrderVerdict::Incomparable);
  auto lex = PartialOrderSpec::lex(IntMat{{1, 1}});
  EXPECT_EQ(compare(lex, make_vec({0, 1}), make_vec({1, 0})), OrderVerdict::Less);
}

TEST(Order, SlackRefinementNeedsZeroCostSlacks) {
  EXPECT_THROW(check_spec(PartialOrderSpec::slack(IntMat{{1, 1}}, {1})), InvalidInput);
  EXPECT_THROW(check_spec(PartialOrderSpec::slack(IntMat{{1, 0}}, {})), InvalidInput);
  EXPECT_NO_THROW(check_spec(PartialOrderSpec::slack(IntMat{{1, 0}}, {1})));
}

TEST(Order, TiebreakBlockComesBeforeObjectives) {
  PartialOrderSpec spec = PartialOrderSpec::plain(IntMat{{0, 1, 0}});
  spec.tiebreak = {0};
  EXPECT_EQ(compare(spec, make_vec({0, 5, 0}), make_vec({1, 0, 0})), OrderVerdict::Less);
  EXPECT_EQ(compare(spec, make_vec({1, 1, 0}), make_vec({1, 0, 1})), OrderVerdict::Greater);
}

TEST(Order, MinimalElementsMatchPairwiseDefinition) {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> d(0, 3);
  auto spec = PartialOrderSpec::plain(IntMat{{1, 2, 0}, {2, 0, 1}});
  for (int round = 0; round < 50; ++round) {
    std::vector<IntVec> pts;
    for (int i = 0; i < 12; ++i) pts.push_back(make_vec({d(rng), d(rng), d(rng)}));
    std::set<IntVec> expect;
    for (const auto& x : pts) {
      bool dominated = false;
      for (const auto& y : pts) dominated = dominated || compare(spec, y, x) == OrderVerdict::Less;
      if (!dominated) expect.insert(x);
    }
    auto got = minimal_elements(spec, pts);
    EXPECT_EQ(std::set<IntVec>(got.begin(), got.end()), expect);
  }
}

TEST(Example1, Setlm) {
  using V = std::vector<IntVec>;
  auto s = [](V v) {
    std::sort(v.begin(), v.end());
    return v;
  };
  EXPECT_EQ(s(setlm(kEx1, make_vec({2, 3}), make_vec({1, 4}))), s({make_vec({2, 3}), make_vec({1, 4})}));
  EXPECT_EQ(setlm(kEx1, make_vec({0, 2}), make_vec({1, 3})), V{make_vec({1, 3})});
  EXPECT_EQ(setlm(kEx1, make_vec({3, 0}), make_vec({4, 2})), V{make_vec({4, 2})});
  EXPECT_EQ(s(setlm(kEx1, make_vec({2, 1}), make_vec({1, 2}))), s({make_vec({2, 1}), make_vec({1, 2})}));
  EXPECT_EQ(setlm(kEx1, make_vec({1, 1}), make_vec({1, 0})), V{make_vec({1, 1})});
}

TEST(Example1, TripletsAndChains) {
  std::vector<IntVec> U{make_vec({2, 3}), make_vec({0, 2}), make_vec({3, 0}), make_vec({2, 1}),
                        make_vec({1, 1})};
  std::vector<IntVec> V{make_vec({1, 4}), make_vec({1, 3}), make_vec({4, 2}), make_vec({1, 2}),
                        make_vec({1, 0})};
  auto F = triplet_set(kEx1, U, V);
  EXPECT_EQ(F.size(), 7u);
  const Triplet a = tri({3, 0}, {4, 2}, {4, 2}), b = tri({2, 3}, {1, 4}, {2, 3}),
                b2 = tri({2, 3}, {1, 4}, {1, 4}), c = tri({0, 2}, {1, 3}, {1, 3}),
                d1 = tri({2, 1}, {1, 2}, {2, 1}), d2 = tri({2, 1}, {1, 2}, {1, 2}),
                e = tri({1, 1}, {1, 0}, {1, 1});
  for (const Triplet& t : {a, b, b2, c, d1, d2, e}) {
    EXPECT_NE(std::find(F.begin(), F.end(), t), F.end());
  }
  auto chains = maximal_chains(kEx1, F, [](const Triplet& t) { return t.w; });
  using Chain = std::vector<Triplet>;
  std::vector<Chain> expect{{a, b, c, d1, e}, {a, b, c, d2, e}, {b2, c, d1, e}, {b2, c, d2, e}};
  ASSERT_EQ(chains.size(), 4u);
  for (const Chain& m : expect) {
    EXPECT_NE(std::find(chains.begin(), chains.end(), m), chains.end());
  }
  std::vector<IntVec> keys;
  for (const auto& t : F) keys.push_back(t.w);
  EXPECT_EQ(count_maximal_chains(kEx1, keys), 4u);
}

// Brute-force chain oracle: every maximal chain found by extending paths in
// the full comparability relation.
TEST(Poset, ChainCountMatchesEnumeration) {
  std::mt19937_64 rng(9);
  std::uniform_int_distribution<int> d(0, 4);
  auto spec = PartialOrderSpec::plain(IntMat{{1, 0}, {0, 1}});
  for (int round = 0; round < 40; ++round) {
    std::vector<IntVec> keys;
    std::set<IntVec> uniq;
    while (keys.size() < 8) {
      IntVec k = make_vec({d(rng), d(rng)});
      if (uniq.insert(k).second) keys.push_back(k);
    }
    auto chains = maximal_chain_indices(spec, keys);
    EXPECT_EQ(chains.size(), count_maximal_chains(spec, keys));
    for (const auto& ch : chains) {
      for (std::size_t i = 1; i < ch.size(); ++i) {
        EXPECT_EQ(compare(spec, keys[ch[i]], keys[ch[i - 1]]), OrderVerdict::Less);
      }
      // Maximal: nothing can be inserted anywhere.
      for (std::size_t x = 0; x < keys.size(); ++x) {
        if (std::find(ch.begin(), ch.end(), x) != ch.end()) continue;
        bool fits_all = true;
        for (std::size_t y : ch) {
          OrderVerdict v = compare(spec, keys[x], keys[y]);
          fits_all = fits_all && (v == OrderVerdict::Less || v == OrderVerdict::Greater);
        }
        EXPECT_FALSE(fits_all);
      }
    }
  }
}
