#include <gtest/gtest.h>

#include <set>

#include "ribbon3/classify.hpp"

using namespace ribbon3;
using namespace ribbon3::classify;

namespace {

CharacterSystem system_of(const Rank3Params& p) { return characters::solve_characters(fusion::make_rank3_ring(p)); }

std::set<std::string> names(const std::vector<std::string>& v) { return {v.begin(), v.end()}; }

const std::set<std::string> kExpected{"Z/3", "K(0,1,0,0)", "K(0,1,0,1)", "K(1,1,0,1)"};

}  // namespace

TEST(EnumerateStarSolutions, Examples) {
  EXPECT_EQ(enumerate_star_solutions(1), (std::vector<Rank3Params>{{0, 1, 0, 0}, {0, 1, 0, 1}, {1, 1, 0, 1}}));
  EXPECT_TRUE(enumerate_star_solutions(0).empty());
  const auto two = enumerate_star_solutions(2);
  EXPECT_TRUE(std::find(two.begin(), two.end(), Rank3Params{0, 1, 0, 2}) != two.end());
  EXPECT_TRUE(std::find(two.begin(), two.end(), fusion::canonicalize({2, 1, 2, 1})) != two.end());
  EXPECT_THROW(enumerate_star_solutions(-1), DomainError);
}

TEST(EnumerateStarSolutions, MatchesQuadrupleLoop) {
  for (long b = 0; b <= 12; ++b) {
    std::set<Rank3Params> brute;
    for (long k = 0; k <= b; ++k)
      for (long l = 0; l <= b; ++l)
        for (long m = 0; m <= b; ++m)
          for (long n = 0; n <= b; ++n)
            if (Rank3Params{k, l, m, n}.satisfies_star()) brute.insert(fusion::canonicalize({k, l, m, n}));
    const auto fast = enumerate_star_solutions(b);
    EXPECT_EQ(std::vector<Rank3Params>(brute.begin(), brute.end()), fast) << b;
  }
}

TEST(Landau, Bounds) {
  EXPECT_EQ(landau_bound(1), 1);
  EXPECT_EQ(landau_bound(2), 2);
  EXPECT_EQ(landau_bound(3), 6);
  using V = std::vector<exactnum::Int>;
  EXPECT_EQ(landau(3).solutions, (std::vector<V>{V{2, 3, 6}, V{2, 4, 4}, V{3, 3, 3}}));
  EXPECT_THROW(landau(0), DomainError);
}

TEST(SymmetricFilter, Examples) {
  auto z3 = fusion::make_z3_ring();
  EXPECT_EQ(symmetric_filter(z3, characters::solve_characters(z3)).status, Status::Pass);

  auto s3 = system_of({0, 1, 0, 1});
  auto v = symmetric_filter(s3.ring, s3);
  EXPECT_EQ(v.status, Status::Pass);
  EXPECT_EQ(v.certificate["global_fp_dim"], 6);
  EXPECT_EQ(v.certificate["dims"][2], 2);
  EXPECT_EQ(v.certificate["witness"]["structure_class"], "Symmetric");

  auto ising = system_of({0, 1, 0, 0});
  auto f = symmetric_filter(ising.ring, ising);
  EXPECT_EQ(f.status, Status::Fail);
  EXPECT_EQ(f.certificate["non_integral"]["object"], "Y");
  EXPECT_EQ(f.certificate["non_integral"]["value"]["minpoly"], Json::array({-2, 0, 1}));
}

TEST(Case1, Examples) {
  auto v = case1_filter({0, 1, 0, 1}, system_of({0, 1, 0, 1}));
  EXPECT_EQ(v.status, Status::Pass);
  EXPECT_EQ(v.certificate["global_fp_dim"], 6);
  EXPECT_EQ(case1_filter({1, 1, 0, 1}, system_of({1, 1, 0, 1})).status, Status::NotApplicable);
}

TEST(Case2, CertificateFor1110) {
  auto v = case2_check({1, 1, 1, 0});
  ASSERT_EQ(v.status, Status::Pass);
  EXPECT_EQ(v.certificate["lambda"], 1);
  EXPECT_EQ(v.certificate["eq1"]["lhs"], 1);
  EXPECT_EQ(v.certificate["eq1"]["rhs"], 1);
  EXPECT_EQ(v.certificate["eq2"]["lhs"], 2);
  EXPECT_EQ(v.certificate["eq2"]["rhs"], 2);
  EXPECT_EQ(v.certificate["eq3"]["lhs"], -1);
  EXPECT_EQ(v.certificate["eq3"]["rhs"], -1);
  EXPECT_EQ(v.certificate["constraint_sum"], -3);

  auto sys = system_of({1, 1, 1, 0});
  EXPECT_EQ(case2_filter({1, 1, 1, 0}, sys).status, Status::Pass);
  EXPECT_EQ(*characters::galois_type(sys).discriminant, 49);
}

TEST(Case2, IrrationalLambdaAndDispatch) {
  auto v = case2_check({1, 2, 3, 1});  // hypothetical: lk = 2
  EXPECT_EQ(v.status, Status::Fail);
  EXPECT_TRUE(v.certificate["lambda"].is_null());
  EXPECT_EQ(v.certificate["lambda_cubed"], 2);
  EXPECT_EQ(case2_check({1, 0, 0, 0}).status, Status::Pass);  // m + l = 0
  EXPECT_EQ(case2_filter({0, 1, 0, 1}, system_of({0, 1, 0, 1})).status, Status::NotApplicable);
}

TEST(Case3a, Examples) {
  auto v = case3a_check({1, 1, 1, 0});
  EXPECT_EQ(v.status, Status::Pass);
  EXPECT_EQ(v.certificate["proportionality"]["lhs"], 2);
  EXPECT_EQ(v.certificate["proportionality"]["rhs"], 1);
  EXPECT_FALSE(v.certificate["proportionality"]["sides_agree"].get<bool>());

  EXPECT_EQ(case3a_check({2, 1, 2, 1}).status, Status::Fail);
  EXPECT_EQ(case3a_check({0, 1, 0, 1}).status, Status::Pass);
  EXPECT_EQ(case3a_check({0, 1, 0, 2}).status, Status::Fail);
  EXPECT_EQ(case3a_filter({0, 1, 0, 0}, system_of({0, 1, 0, 0})).status, Status::NotApplicable);
}

TEST(Case3b, Examples) {
  auto a = case3b_filter({0, 1, 0, 0}, system_of({0, 1, 0, 0}));
  EXPECT_EQ(a.status, Status::Pass);
  const auto& oa = a.certificate["orientations"][0]["certificate"];
  EXPECT_EQ(oa["t"], -1);
  EXPECT_EQ(oa["s"], 0);
  EXPECT_EQ(oa["branch"], "s=0");

  auto b = case3b_filter({0, 1, 0, 2}, system_of({0, 1, 0, 2}));
  EXPECT_EQ(b.status, Status::Fail);
  const auto& ob = b.certificate["orientations"][0]["certificate"];
  EXPECT_EQ(ob["t"], -1);
  EXPECT_EQ(ob["s"], 0);
  EXPECT_EQ(ob["n"], 2);

  auto c = case3b_filter({2, 1, 2, 1}, system_of({2, 1, 2, 1}));
  EXPECT_EQ(c.status, Status::Fail);
  const auto& oc = c.certificate["orientations"][0]["certificate"];
  EXPECT_EQ(oc["t"], -1);
  EXPECT_EQ(oc["s"], 1);
  EXPECT_EQ(oc["branch"], "t=-1 family");
  EXPECT_EQ(oc["family"], (Json{{"k", 2}, {"l", 1}, {"m", 2}, {"n", 1}}));
  EXPECT_EQ(oc["two_s_squared"], 2);

  // Same ring in canonical orientation: the family appears on the swapped side.
  auto d = case3b_filter({1, 2, 1, 2}, system_of({1, 2, 1, 2}));
  EXPECT_EQ(d.status, Status::Fail);
  EXPECT_EQ(d.certificate["orientations"][1]["certificate"]["branch"], "t=-1 family");
}

TEST(Case3b, NonIntegralFixedCharacterThrows) {
  const auto r2 = exactnum::isolate_real_roots(IntPoly{-2, 0, 1}, Rational(1, 1024)).back().value;
  EXPECT_THROW(detail::case3b_orientation({0, 1, 0, 0}, r2, RealAlgebraic(0)), NonIntegralFixedCharacter);
}

TEST(Case3b, GridAudit) {
  EXPECT_TRUE(audit_case3b_grid(50, 50));
  EXPECT_TRUE(audit_case3b_grid(1, 2));
  EXPECT_TRUE(audit_case3b_grid(0, 5));
  EXPECT_EQ(case3b_grid_gap(1, 2), Rational(51, 10));
}

TEST(Case3b, TMinusOneFamilyChain) {
  const auto checks = audit_t_minus_one_family(50);
  ASSERT_EQ(checks.size(), 50u);
  for (const auto& c : checks) {
    EXPECT_TRUE(c.y1_exceeds_2s) << c.s;
    EXPECT_FALSE(c.s_y1_at_most_2) << c.s;
    EXPECT_TRUE(c.implication_holds) << c.s;
  }
}

TEST(Classify, BoundTwo) {
  auto r = classify_all(2, 60);
  EXPECT_EQ(names(r.admissible()), kExpected);
  for (const auto& e : r.rings) {
    if (e.ring.is_z3()) continue;
    const auto p = *e.ring.params();
    if (p == Rank3Params{0, 1, 0, 2} || p == fusion::canonicalize({2, 1, 2, 1})) {
      EXPECT_FALSE(e.symmetric.passed());
      EXPECT_FALSE(e.nonmodular.passed());
      EXPECT_FALSE(e.modular.result.passed());
    }
  }
}

TEST(Classify, AliasesAndReportShape) {
  auto r = classify_all(1, 12);
  const Json j = to_json(r);
  EXPECT_EQ(j["header"]["limitations"][0], kLimitation);
  EXPECT_NE(j["header"]["notes"][0].get<std::string>().find("K(1,0,0,0) ≡ K(0,1,0,0)"), std::string::npos);
  std::map<std::string, Json> by_name;
  for (const auto& e : j["rings"]) by_name[e["name"].get<std::string>()] = e;
  EXPECT_EQ(by_name["K(0,1,0,0)"]["alias"], Json::array({"K(1,0,0,0)"}));
  EXPECT_EQ(by_name["K(1,1,0,1)"]["alias"], Json::array({"K(1,1,1,0)"}));
  EXPECT_EQ(by_name["K(1,1,0,1)"]["galois"], "C3");
  EXPECT_EQ(by_name["K(1,1,0,1)"]["verdicts"]["modular_filter"]["case"], "Case 2");
  EXPECT_EQ(by_name["Z/3"]["params"], "Z/3");
  EXPECT_EQ(aliases(fusion::make_rank3_ring({1, 2, 1, 2})), std::vector<std::string>{"K(2,1,2,1)"});
  const std::string table = render_table(r);
  EXPECT_NE(table.find(kLimitation), std::string::npos);
  EXPECT_NE(table.find("K(1,1,1,0)"), std::string::npos);
}

TEST(Classify, DeterministicAcrossThreads) {
  const auto a = to_json(classify_all(6, 24, 1e-9, true, 1)).dump();
  const auto b = to_json(classify_all(6, 24, 1e-9, true, 3)).dump();
  EXPECT_EQ(a, b);
}

TEST(Property, GaloisDispatchIsTotal) {
  for (const auto& p : enumerate_star_solutions(20)) {
    auto sys = system_of(p);
    auto mv = modular_filter(sys.ring, sys);
    int applicable = 0;
    for (const auto& [c, v] : mv.all) applicable += v.status != Status::NotApplicable;
    EXPECT_EQ(applicable, 1) << p.to_string();
    EXPECT_NE(mv.result.status, Status::NotApplicable) << p.to_string();
    EXPECT_EQ(mv.applied, dispatch(sys.ring, characters::galois_type(sys).tag));
  }
}

TEST(Property, FilterSoundnessAtBound20) {
  auto r = classify_all(20, 60);
  EXPECT_EQ(names(r.admissible()), kExpected);
  EXPECT_EQ(names(r.modular_survivors()), kExpected);
  for (const auto& e : r.rings) {
    EXPECT_EQ(e.admissible, e.symmetric.passed() || e.nonmodular.passed() || e.modular.result.passed());
    if (kExpected.count(e.name())) {
      ASSERT_TRUE(e.witnesses.has_value()) << e.name();
      EXPECT_FALSE(e.witnesses->empty()) << e.name();
      continue;
    }
    for (const auto* v : {&e.symmetric, &e.nonmodular, &e.modular.result}) {
      EXPECT_FALSE(v->passed()) << e.name();
      if (v->status == Status::Fail) {
        EXPECT_FALSE(v->certificate.empty()) << e.name() << " " << v->reason;
      }
    }
  }
}

TEST(Property, CaseFiltersAtBound20) {
  for (const auto& p : enumerate_star_solutions(20)) {
    auto sys = system_of(p);
    const auto tag = characters::galois_type(sys).tag;
    const bool is_ising = p == Rank3Params{0, 1, 0, 0};
    if (tag == GaloisTag::C2MovingFP) {
      EXPECT_EQ(case3b_filter(p, sys).passed(), is_ising) << p.to_string();
    }
    if (tag == GaloisTag::Trivial) {
      EXPECT_EQ(case1_filter(p, sys).status, Status::Pass) << p.to_string();
    }
    if (tag == GaloisTag::S3) {
      EXPECT_EQ(modular_filter(sys.ring, sys).result.status, Status::Fail) << p.to_string();
    }
  }
}

TEST(Property, CrossValidationWithSearch) {
  // No filter-Fail ring has ribbon data of twist order <= 60; every
  // filter-Pass ring has some.
  auto r = classify_all(10, 60, 1e-9, true, 1);
  for (const auto& e : r.rings) {
    ASSERT_TRUE(e.witnesses.has_value());
    EXPECT_EQ(e.admissible, !e.witnesses->empty()) << e.name();
  }
}
