#include "doctest.h"
#include "realcover/planner.hpp"

using namespace realcover;

namespace {

CoverSpec p1(int g, int s, int a, int k, std::vector<int> deg) {
  return {{g, s, a}, CoverTarget::ProjLine, k, DegreeVector(std::move(deg))};
}

Plan must_plan(const CoverSpec& spec) {
  const PlanResult r = plan(spec);
  REQUIRE_MESSAGE(std::holds_alternative<Plan>(r), to_string(spec));
  return std::get<Plan>(r);
}

}  // namespace

TEST_CASE("all-ones M-type pencil uses construction III") {
  const Plan p = must_plan(p1(6, 3, 0, 3, {1, 1, 1}));
  CHECK(p.provenance == CaseTag::Case2AllOnes);
  CHECK(p.seed == BaseSeed{HyperellipticSeed{{5, 2, 0}, DegreeVector({1, 1})}});
  CHECK(p.steps == std::vector<ConstructionStep>{ConstructionStep::three()});
}

TEST_CASE("inadmissible targets are infeasible with the violated predicate") {
  const PlanResult r = plan(p1(4, 0, 1, 3, {}));
  REQUIRE(std::holds_alternative<Infeasible>(r));
  CHECK(std::get<Infeasible>(r).reason == "parity");
}

TEST_CASE("R0 with large degree is a generic pencil") {
  for (int g = 0; g <= 6; ++g) {
    const Plan p = must_plan({{g, 0, 1}, CoverTarget::AnisotropicConic, g + 3, {}});
    CHECK(p.provenance == CaseTag::R0BigK);
    CHECK(p.seed == BaseSeed{GenericR0PencilSeed{g, g + 3}});
    CHECK(p.steps.empty());
  }
}

TEST_CASE("R0 with small degree climbs from a hyperelliptic seed") {
  const Plan p = must_plan({{7, 0, 1}, CoverTarget::AnisotropicConic, 4, {}});
  CHECK(p.provenance == CaseTag::R0SmallK);
  CHECK(p.seed == BaseSeed{HyperellipticR0Seed{5}});
  CHECK(p.steps.size() == 2);
}

TEST_CASE("all-zero degrees") {
  const CoverSpec spec = p1(5, 2, 0, 4, {0, 0});
  const Plan p = must_plan(spec);
  CHECK(p.provenance == CaseTag::Case5);
  CHECK(execute(p.seed, p.steps) == spec);
  CHECK(verify_plan(p, spec).verified);
}

TEST_CASE("single component of full degree") {
  const CoverSpec spec = p1(4, 1, 0, 3, {3});
  const Plan p = must_plan(spec);
  CHECK(p.provenance == CaseTag::Case1);
  CHECK(p.seed == BaseSeed{HyperellipticSeed{{4, 1, 0}, DegreeVector({2})}});
  CHECK(p.steps == std::vector<ConstructionStep>{ConstructionStep::one(Variant::WithoutRealRam, "C1")});
  CHECK(verify_plan(p, spec).verified);
}

TEST_CASE("each case tag is reached and verifies") {
  const std::vector<std::pair<CoverSpec, CaseTag>> cases{
      {p1(4, 2, 1, 4, {1, 1}), CaseTag::A1SPos},
      {p1(3, 0, 1, 4, {}), CaseTag::A1S0SmallG},
      {p1(6, 0, 1, 4, {}), CaseTag::A1S0BigG},
      {p1(4, 1, 0, 5, {5}), CaseTag::Case1},
      {p1(4, 3, 0, 3, {1, 1, 1}), CaseTag::Case2AllOnes},
      {p1(4, 3, 0, 5, {3, 1, 1}), CaseTag::Case2Big},
      {p1(4, 3, 0, 5, {1, 1, 1}), CaseTag::Case3},
      {p1(6, 3, 0, 5, {2, 1, 0}), CaseTag::Case4},
      {p1(6, 3, 0, 4, {0, 0, 0}), CaseTag::Case5},
  };
  for (const auto& [spec, tag] : cases) {
    const Plan p = must_plan(spec);
    CHECK_MESSAGE(p.provenance == tag, to_string(spec));
    CHECK_MESSAGE(verify_plan(p, spec).verified, to_string(spec));
  }
}

TEST_CASE("degree 2 onto P1 is out of scope") {
  const PlanResult r = plan(p1(2, 1, 0, 2, {2}));
  REQUIRE(std::holds_alternative<Infeasible>(r));
}

TEST_CASE("dropping a step breaks verification") {
  for (const auto& spec : {p1(4, 1, 0, 5, {5}), p1(6, 3, 0, 5, {2, 1, 0}), p1(4, 3, 0, 5, {3, 1, 1})}) {
    const Plan p = must_plan(spec);
    REQUIRE(!p.steps.empty());
    for (std::size_t i = 0; i < p.steps.size(); ++i) {
      Plan broken = p;
      broken.steps.erase(broken.steps.begin() + static_cast<long>(i));
      CHECK_FALSE(verify_plan(broken, spec).verified);
    }
  }
}

TEST_CASE("verification flags a hand-built plan aimed at the wrong target") {
  // executes cleanly to (2,3,0), k=4, degrees (0,0,0)
  Plan hand{HyperellipticSeed{{1, 2, 0}, DegreeVector({0, 0})},
            {ConstructionStep::one(Variant::WithRealRam, "C1"), ConstructionStep::one(Variant::WithRealRam, "C1"),
             ConstructionStep::two(Variant::WithRealRam)},
            CaseTag::Case5};
  CHECK(execute(hand.seed, hand.steps) == p1(2, 3, 0, 4, {0, 0, 0}));
  CHECK(verify_plan(hand, p1(2, 3, 0, 4, {0, 0, 0})).verified);
  const Verification v = verify_plan(hand, p1(2, 3, 0, 4, {2, 0, 0}));
  CHECK_FALSE(v.verified);
  CHECK_FALSE(v.trail.empty());
}

TEST_CASE("verification reports precondition failures instead of throwing") {
  Plan hand{HyperellipticSeed{{4, 1, 0}, DegreeVector({2})}, {ConstructionStep::four()}, CaseTag::Case1};
  Verification v;
  CHECK_NOTHROW(v = verify_plan(hand, p1(5, 1, 0, 4, {2})));
  CHECK_FALSE(v.verified);
  Plan off_catalog{HyperellipticSeed{{4, 1, 0}, DegreeVector({1})}, {}, CaseTag::Case1};
  CHECK_FALSE(verify_plan(off_catalog, p1(4, 1, 0, 2, {1})).verified);
}

TEST_CASE("plan json round trip") {
  for (const auto& spec : {p1(4, 2, 1, 4, {1, 1}), p1(6, 3, 0, 5, {2, 1, 0}), p1(6, 0, 1, 4, {})}) {
    const Plan p = must_plan(spec);
    const Plan back = plan_from_json(Json::parse(to_json(p).dump()));
    CHECK(back == p);
    CHECK(verify_plan(back, spec).verified);
  }
}

TEST_CASE("every R0 plan verifies") {
  for (int g = 0; g <= 8; ++g)
    for (int k = 2; k <= 11; ++k) {
      const CoverSpec spec{{g, 0, 1}, CoverTarget::AnisotropicConic, k, {}};
      const PlanResult r = plan(spec);
      if (!target_admissible(spec)) {
        CHECK(std::holds_alternative<Infeasible>(r));
        continue;
      }
      REQUIRE_MESSAGE(std::holds_alternative<Plan>(r), to_string(spec));
      CHECK_MESSAGE(verify_plan(std::get<Plan>(r), spec).verified, to_string(spec));
    }
}
