#include <gtest/gtest.h>

#include <set>

#include "ribbon3/fusion.hpp"

using namespace ribbon3;
using namespace ribbon3::fusion;
using exactnum::RealAlgebraic;

namespace {

std::set<Rank3Params> star_solutions_up_to(long b) {
  std::set<Rank3Params> out;
  for (long k = 0; k <= b; ++k)
    for (long l = 0; l <= b; ++l)
      for (long m = 0; m <= b; ++m)
        for (long n = 0; n <= b; ++n)
          if (Rank3Params{k, l, m, n}.satisfies_star()) out.insert(canonicalize({k, l, m, n}));
  return out;
}

}  // namespace

TEST(MakeRank3Ring, MultiplicationTable) {
  auto r = make_rank3_ring({0, 1, 0, 1});
  EXPECT_EQ(r.tensor()[1][1], (std::array<long, 3>{1, 0, 0}));  // X^2 = 1
  EXPECT_EQ(r.tensor()[2][2], (std::array<long, 3>{1, 1, 1}));  // Y^2 = 1+X+Y
  EXPECT_EQ(r.tensor()[1][2], (std::array<long, 3>{0, 0, 1}));  // XY = Y
  EXPECT_TRUE(check_based_axioms(r.tensor(), r.dual()).all_pass());

  auto s = make_rank3_ring({1, 0, 0, 0});
  EXPECT_EQ(s.tensor()[1][1], (std::array<long, 3>{1, 0, 1}));
  EXPECT_EQ(s.tensor()[2][2], (std::array<long, 3>{1, 0, 0}));
  EXPECT_EQ(s.tensor()[1][2], (std::array<long, 3>{0, 1, 0}));
  EXPECT_TRUE(check_based_axioms(s.tensor(), s.dual()).all_pass());
}

TEST(MakeRank3Ring, RefusesStarViolation) {
  EXPECT_THROW(make_rank3_ring({1, 1, 2, 0}), StarViolation);
  EXPECT_THROW(make_rank3_ring({-1, 0, 0, 0}), DomainError);
}

TEST(MakeZ3Ring, Structure) {
  auto z = make_z3_ring();
  EXPECT_TRUE(z.is_z3());
  EXPECT_EQ(z.N(1, 2, 0), 1);
  EXPECT_EQ(z.N(1, 1, 2), 1);
  EXPECT_EQ(z.dual(1), 2);
  EXPECT_EQ(z.dual(2), 1);
  EXPECT_TRUE(check_based_axioms(z.tensor(), z.dual()).all_pass());
}

TEST(CheckBasedAxioms, Examples) {
  auto ising = make_rank3_ring({0, 1, 0, 0});
  EXPECT_TRUE(check_based_axioms(ising.tensor(), ising.dual()).all_pass());

  auto bad = check_based_axioms(rank3_table({1, 1, 2, 0}), {0, 1, 2});
  EXPECT_FALSE(bad.associativity);
  EXPECT_TRUE(bad.unit);
  EXPECT_TRUE(bad.duality);
  EXPECT_EQ(bad.first_failure, "associativity");
  ASSERT_TRUE(bad.first_violation.has_value());

  Tensor id{};
  for (int j = 0; j < 3; ++j) id[0][j][j] = id[j][0][j] = 1;
  auto dual_fail = check_based_axioms(id, {0, 1, 2});
  EXPECT_FALSE(dual_fail.duality);
  EXPECT_FALSE(dual_fail.all_pass());
}

TEST(CheckBasedAxioms, DualityMustReverseProducts) {
  // X^2 = Y, XY = YX = 1 + X, Y^2 = X + Y with X* = Y: associative but
  // N_XX^Y = 1 while N_{X*X*}^{Y*} = N_YY^X = 1 and N_XY^X = 1 vs N_XY^Y = 0.
  Tensor N{};
  for (int j = 0; j < 3; ++j) N[0][j][j] = N[j][0][j] = 1;
  N[1][1] = {0, 0, 1};
  N[1][2] = {1, 1, 0};
  N[2][1] = {1, 1, 0};
  N[2][2] = {0, 1, 1};
  auto r = check_based_axioms(N, {0, 2, 1});
  EXPECT_FALSE(r.involution);
}

TEST(Canonicalize, Examples) {
  EXPECT_EQ(canonicalize({1, 0, 0, 0}), (Rank3Params{0, 1, 0, 0}));
  EXPECT_EQ(canonicalize({0, 1, 0, 1}), (Rank3Params{0, 1, 0, 1}));
  EXPECT_EQ(canonicalize({1, 1, 1, 0}), (Rank3Params{1, 1, 0, 1}));
}

TEST(Property, StarIffAssociative) {
  for (long k = 0; k <= 10; ++k)
    for (long l = 0; l <= 10; ++l)
      for (long m = 0; m <= 10; ++m)
        for (long n = 0; n <= 10; ++n) {
          const Rank3Params p{k, l, m, n};
          EXPECT_EQ(check_based_axioms(rank3_table(p), {0, 1, 2}).associativity, p.satisfies_star()) << p.to_string();
        }
}

TEST(Property, CanonicalizeIdempotentAndIsomorphic) {
  for (const auto& p : star_solutions_up_to(6)) {
    for (const Rank3Params q : {p, p.swapped()}) {
      const auto c = canonicalize(q);
      EXPECT_EQ(canonicalize(c), c);
      const auto a = make_rank3_ring(q).tensor(), b = make_rank3_ring(c).tensor();
      EXPECT_TRUE(a == b || relabel(a) == b) << q.to_string();
    }
  }
}

TEST(Enumerate, BoundOne) {
  auto rings = enumerate_rank3_based_rings(1);
  std::set<Rank3Params> family;
  int z3 = 0;
  for (const auto& r : rings) {
    if (r.is_z3()) {
      ++z3;
      continue;
    }
    ASSERT_TRUE(r.params().has_value()) << "unrecognized ring";
    EXPECT_TRUE(r.self_dual());
    family.insert(canonicalize(*r.params()));
  }
  EXPECT_EQ(z3, 1);
  EXPECT_EQ(family, star_solutions_up_to(1));
  EXPECT_EQ(rings.size(), family.size() + 1);
}

TEST(Enumerate, BoundZeroIsEmpty) {
  // Z/3 needs g*g = g^2, a structure constant of 1; (*) excludes k = l = 0.
  EXPECT_TRUE(enumerate_rank3_based_rings(0).empty());
}

TEST(Enumerate, BoundTwoMatchesFamiliesAndThreadsAgree) {
  auto one = enumerate_rank3_based_rings(2, 1);
  auto many = enumerate_rank3_based_rings(2, 4);
  ASSERT_EQ(one.size(), many.size());
  for (std::size_t i = 0; i < one.size(); ++i) EXPECT_TRUE(one[i] == many[i]);
  std::set<Rank3Params> family;
  for (const auto& r : one)
    if (!r.is_z3()) {
      ASSERT_TRUE(r.params().has_value());
      family.insert(*r.params());
    }
  EXPECT_EQ(family, star_solutions_up_to(2));
}

TEST(FpDimensions, Examples) {
  auto s3 = fp_dimensions(make_rank3_ring({0, 1, 0, 1}));
  EXPECT_EQ(s3, (std::vector<RealAlgebraic>{RealAlgebraic(1), RealAlgebraic(1), RealAlgebraic(2)}));
  auto ising = fp_dimensions(make_rank3_ring({0, 1, 0, 0}));
  EXPECT_EQ(ising[1], RealAlgebraic(1));
  EXPECT_EQ(ising[2].minimal_polynomial(), (exactnum::IntPoly{-2, 0, 1}));
  EXPECT_GT(ising[2], RealAlgebraic(0));
  EXPECT_EQ(fp_dimensions(make_z3_ring()), (std::vector<RealAlgebraic>{RealAlgebraic(1), RealAlgebraic(1), RealAlgebraic(1)}));
}

TEST(GlobalFpDim, Examples) {
  EXPECT_EQ(global_fp_dim(make_rank3_ring({0, 1, 0, 1})), RealAlgebraic(6));
  EXPECT_EQ(global_fp_dim(make_z3_ring()), RealAlgebraic(3));
  EXPECT_EQ(global_fp_dim(make_rank3_ring({0, 1, 0, 0})), RealAlgebraic(4));
}

TEST(Property, FpDimensionsAtLeastOne) {
  for (const auto& p : star_solutions_up_to(6)) {
    auto d = fp_dimensions(make_rank3_ring(p));
    for (const auto& v : d) EXPECT_GE(v, RealAlgebraic(1)) << p.to_string();
  }
}
