#include <gtest/gtest.h>

#include <random>

#include "moipgb/instance_io.hpp"
#include "moipgb/model.hpp"
#include "support.hpp"

using namespace moipgb;

TEST(Vectors, PositiveNegativeParts) {
  IntVec u = make_vec({3, -2, 0, 5, -1});
  EXPECT_EQ(positive_part(u), make_vec({3, 0, 0, 5, 0}));
  EXPECT_EQ(negative_part(u), make_vec({0, 2, 0, 0, 1}));
  EXPECT_EQ(positive_part(u) - negative_part(u), u);
}

TEST(Vectors, DimensionMismatchThrows) {
  EXPECT_THROW(make_vec({1, 2}) + make_vec({1}), InvalidInput);
  IntMat A{{1, 2}, {3, 4}};
  EXPECT_THROW(A * make_vec({1, 2, 3}), InvalidInput);
  EXPECT_THROW((IntMat{{1, 2}, {3}}), InvalidInput);
}

TEST(Validation, ReportsEveryProblem) {
  MoipInstance inst;
  inst.A = IntMat{{1, 1}};
  inst.b = make_vec({-1, 2});
  inst.C = IntMat{{1, -1, 0}};
  inst.slack_indices = {7};
  ValidationReport r = validate_instance(inst);
  EXPECT_FALSE(r.ok());
  EXPECT_GE(r.problems.size(), 4u);
  EXPECT_THROW(require_valid(inst), InvalidInput);
  EXPECT_TRUE(validate_instance(testkit::example4()).ok());
}

TEST(Validation, FeasibilityRespectsBounds) {
  MoipInstance inst = testkit::example2(true);
  EXPECT_TRUE(is_feasible(inst, make_vec({9, 0, 1, 11})));
  EXPECT_FALSE(is_feasible(inst, make_vec({11, 0, 5, 11})));  // x1 > 10
  EXPECT_FALSE(is_feasible(inst, make_vec({9, 0, 1, 10})));
}

TEST(Bounds, PropagationHandlesMixedSigns) {
  // 2x + 2y - z = 17, 2y + t = 11: z is only bounded once x is.
  IntMat A{{2, 2, -1, 0}, {0, 2, 0, 1}};
  IntVec b = make_vec({17, 11});
  auto ub = propagate_bounds(A, b, std::vector<std::optional<Integer>>(4));
  EXPECT_FALSE(ub[0].has_value());
  EXPECT_EQ(ub[1], Integer(5));
  EXPECT_FALSE(ub[2].has_value());
  EXPECT_EQ(ub[3], Integer(11));
  std::vector<std::optional<Integer>> known(4);
  known[0] = 10;
  ub = propagate_bounds(A, b, known);
  EXPECT_EQ(ub[2], Integer(2 * 10 + 2 * 5 - 17));
}

TEST(Bounds, PropagatedBoundsAreValid) {
  // Every feasible point of a bounded random instance respects the bounds.
  for (std::uint64_t seed = 0; seed < 12; ++seed) {
    MoipInstance inst = testkit::random_instance(seed);
    std::vector<std::optional<Integer>> known(inst.num_vars());
    if (inst.bounds) {
      for (std::size_t j = 0; j < known.size(); ++j) known[j] = (*inst.bounds)[j];
    }
    auto ub = propagate_bounds(inst.A, inst.b, known);
    for (const IntVec& x : testkit::brute_fiber(inst)) {
      for (std::size_t j = 0; j < x.size(); ++j) {
        ASSERT_TRUE(ub[j].has_value());
        EXPECT_LE(x[j], *ub[j]) << "seed " << seed;
      }
    }
  }
}

TEST(Bounds, AsConstraintsPreservesTheFiber) {
  MoipInstance inst = testkit::example2(true);
  MoipInstance wide = with_bounds_as_constraints(inst);
  EXPECT_FALSE(wide.bounds.has_value());
  EXPECT_GT(wide.num_vars(), inst.num_vars());
  std::set<IntVec> projected;
  for (const IntVec& y : testkit::brute_fiber(wide)) {
    projected.insert(IntVec(y.begin(), y.begin() + 4));
  }
  std::vector<IntVec> direct = testkit::brute_fiber(inst);
  EXPECT_EQ(projected, std::set<IntVec>(direct.begin(), direct.end()));
}

TEST(InstanceIo, ParsesAndRoundTrips) {
  MoipInstance inst = load_instance(testkit::fixture("example4.json"));
  EXPECT_EQ(inst.A, testkit::example4().A);
  EXPECT_EQ(inst.b, testkit::example4().b);
  EXPECT_EQ(inst.slack_indices, (std::set<std::size_t>{2, 3, 4}));
  MoipInstance again = parse_instance(dump_instance(inst));
  EXPECT_EQ(again.A, inst.A);
  EXPECT_EQ(again.C, inst.C);
  EXPECT_EQ(again.b, inst.b);
}

TEST(InstanceIo, BigIntegersAsStrings) {
  MoipInstance inst = load_instance(testkit::fixture("bigint.json"));
  EXPECT_EQ(inst.b[0], Integer("100000000000000000000"));
  EXPECT_EQ(parse_instance(dump_instance(inst)).b, inst.b);
}

TEST(InstanceIo, RejectsBadDocuments) {
  EXPECT_THROW(parse_instance("{"), InvalidInput);
  EXPECT_THROW(parse_instance(R"({"A":[[1]],"b":[1]})"), InvalidInput);
  EXPECT_THROW(parse_instance(R"({"A":[[1]],"b":[1],"C":[[1]],"weights":[1]})"), InvalidInput);
  EXPECT_THROW(parse_instance(R"({"A":[[1.5]],"b":[1],"C":[[1]]})"), InvalidInput);
  EXPECT_THROW(parse_instance(R"({"A":[[1]],"b":[-1],"C":[[1]]})"), InvalidInput);
  EXPECT_THROW(load_instance(testkit::fixture("malformed.json")), InvalidInput);
}

TEST(InstanceIo, ParseVector) {
  EXPECT_EQ(parse_vector("17,11"), make_vec({17, 11}));
  EXPECT_EQ(parse_vector("(1, -2, 3)"), make_vec({1, -2, 3}));
  EXPECT_EQ(parse_vector("[4 5]"), make_vec({4, 5}));
  EXPECT_THROW(parse_vector("1,x"), InvalidInput);
}
