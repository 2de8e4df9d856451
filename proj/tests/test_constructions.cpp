#include "doctest.h"
#include "realcover/constructions.hpp"

using namespace realcover;

namespace {

using V = Variant;

LabeledState state(int g, int a, int k, std::vector<int> deltas, CoverTarget target = CoverTarget::ProjLine) {
  LabeledState s;
  s.g = g;
  s.a = a;
  s.k = k;
  s.target = target;
  for (std::size_t i = 0; i < deltas.size(); ++i) s.components.push_back({"C" + std::to_string(i + 1), deltas[i]});
  return s;
}

std::vector<int> deltas(const LabeledState& s) {
  std::vector<int> out;
  for (const auto& c : s.components) out.push_back(c.delta);
  return out;
}

}  // namespace

// One case per (kind, variant); each pins the full delta (g, s, k, degrees, a).

TEST_CASE("I with real ramification lowers a positive degree") {
  const auto next = apply_step(state(4, 0, 2, {2}), ConstructionStep::one(V::WithRealRam, "C1"));
  CHECK(next.g == 4);
  CHECK(next.s() == 1);
  CHECK(next.k == 3);
  CHECK(next.a == 0);
  CHECK(deltas(next) == std::vector<int>{1});
}

TEST_CASE("I with real ramification flips a degree-0 component to 1") {
  const auto next = apply_step(state(3, 0, 2, {0, 0}), ConstructionStep::one(V::WithRealRam, "C2"));
  CHECK(next.g == 3);
  CHECK(next.s() == 2);
  CHECK(next.k == 3);
  CHECK(next.a == 0);
  CHECK(deltas(next) == std::vector<int>{0, 1});
}

TEST_CASE("I without real ramification raises the degree") {
  const auto next = apply_step(state(4, 0, 2, {2}), ConstructionStep::one(V::WithoutRealRam, "C1"));
  CHECK(next.g == 4);
  CHECK(next.s() == 1);
  CHECK(next.k == 3);
  CHECK(next.a == 0);
  CHECK(deltas(next) == std::vector<int>{3});
}

TEST_CASE("II with real ramification adds a degree-0 component") {
  const auto next = apply_step(state(2, 0, 4, {0}), ConstructionStep::two(V::WithRealRam));
  CHECK(next.g == 3);
  CHECK(next.s() == 2);
  CHECK(next.k == 4);
  CHECK(next.a == 0);
  CHECK(deltas(next) == std::vector<int>{0, 0});
  CHECK(next.components.back().label == "N1");
}

TEST_CASE("II without real ramification makes the curve non-separating") {
  const auto next = apply_step(state(2, 0, 4, {2}), ConstructionStep::two(V::WithoutRealRam));
  CHECK(next.g == 3);
  CHECK(next.s() == 1);
  CHECK(next.k == 4);
  CHECK(next.a == 1);
  CHECK(deltas(next) == std::vector<int>{2});
  const auto again = apply_step(next, ConstructionStep::two(V::WithoutRealRam));
  CHECK(again.a == 1);
  CHECK(again.g == 4);
}

TEST_CASE("III adds a degree-1 component") {
  const auto next = apply_step(state(3, 0, 2, {1, 1}), ConstructionStep::three());
  CHECK(next.g == 4);
  CHECK(next.s() == 3);
  CHECK(next.k == 3);
  CHECK(next.a == 0);
  CHECK(deltas(next) == std::vector<int>{1, 1, 1});
}

TEST_CASE("IV adds genus 1 and two sheets on a curve without real points") {
  const auto next = apply_step(state(3, 1, 2, {}), ConstructionStep::four());
  CHECK(next.g == 4);
  CHECK(next.s() == 0);
  CHECK(next.k == 4);
  CHECK(next.a == 1);
  CHECK_THROWS_AS(apply_step(state(3, 0, 2, {2}), ConstructionStep::four()), PreconditionViolated);
}

TEST_CASE("V adds genus 1 and one sheet over the anisotropic conic") {
  const auto next = apply_step(state(3, 1, 2, {}, CoverTarget::AnisotropicConic), ConstructionStep::five());
  CHECK(next.g == 4);
  CHECK(next.s() == 0);
  CHECK(next.k == 3);
  CHECK(next.a == 1);
  CHECK(next.target == CoverTarget::AnisotropicConic);
  CHECK_THROWS_AS(apply_step(state(3, 1, 2, {}), ConstructionStep::five()), PreconditionViolated);
}

TEST_CASE("step preconditions") {
  CHECK_THROWS_AS(apply_step(state(4, 0, 2, {2}), ConstructionStep::two(V::WithRealRam)), PreconditionViolated);
  CHECK_THROWS_AS(apply_step(state(4, 0, 2, {2}), ConstructionStep::one(V::WithRealRam, "N7")), PreconditionViolated);
  CHECK_THROWS_AS(apply_step(state(4, 0, 2, {2}), ConstructionStep{StepKind::III, V::WithRealRam, std::nullopt}),
                  PreconditionViolated);
  CHECK_THROWS_AS(validate_step({StepKind::I, V::NotApplicable, std::string("C1")}), std::invalid_argument);
}

TEST_CASE("seed states") {
  const auto s1 = seed_state(HyperellipticSeed{{4, 1, 0}, DegreeVector({2})});
  CHECK(s1.g == 4);
  CHECK(s1.k == 2);
  CHECK(deltas(s1) == std::vector<int>{2});
  CHECK(s1.components[0].label == "C1");

  const auto s2 = seed_state(HyperellipticSeed{{3, 2, 0}, DegreeVector({1, 1})});
  CHECK(deltas(s2) == std::vector<int>{1, 1});

  const auto s3 = seed_state(GenericPencilSeed{3, 4});
  CHECK(s3.g == 3);
  CHECK(s3.s() == 0);
  CHECK(s3.a == 1);
  CHECK(s3.k == 4);

  const auto s4 = seed_state(HyperellipticR0Seed{3});
  CHECK(s4.target == CoverTarget::AnisotropicConic);
  CHECK(s4.k == 2);

  CHECK_THROWS_AS(seed_state(HyperellipticSeed{{4, 1, 0}, DegreeVector({1})}), SeedNotInCatalog);
  CHECK_THROWS_AS(seed_state(GenericPencilSeed{4, 4}), SeedNotInCatalog);
  CHECK_THROWS_AS(seed_state(HyperellipticR0Seed{2}), SeedNotInCatalog);
}

TEST_CASE("execute") {
  const BaseSeed seed = HyperellipticSeed{{4, 1, 0}, DegreeVector({2})};
  const std::vector<ConstructionStep> steps{ConstructionStep::one(V::WithoutRealRam, "C1")};
  const CoverSpec want{{4, 1, 0}, CoverTarget::ProjLine, 3, DegreeVector({3})};
  CHECK(execute(seed, steps) == want);
  CHECK(execute(seed, {}) == CoverSpec{{4, 1, 0}, CoverTarget::ProjLine, 2, DegreeVector({2})});

  // labels survive canonical sorting
  const BaseSeed zeros = HyperellipticSeed{{1, 2, 0}, DegreeVector({0, 0})};
  const std::vector<ConstructionStep> flip{ConstructionStep::one(V::WithRealRam, "C2"), ConstructionStep::three()};
  const auto trace = execute_trace(zeros, flip);
  REQUIRE(trace.size() == 3);
  CHECK(trace.back().components[2].label == "N1");
  CHECK(canonicalize(trace.back()).degrees == DegreeVector({1, 1, 0}));
}

TEST_CASE("execute_trace reports the failing step") {
  const BaseSeed seed = HyperellipticSeed{{4, 1, 0}, DegreeVector({2})};
  const std::vector<ConstructionStep> steps{ConstructionStep::one(V::WithoutRealRam, "C1"), ConstructionStep::four()};
  try {
    execute_trace(seed, steps);
    FAIL("expected a precondition failure");
  } catch (const PreconditionViolated& e) {
    CHECK(e.kind() == StepKind::IV);
    CHECK(e.step_index() == std::optional<std::size_t>(1));
  }
}

TEST_CASE("state violations") {
  CHECK(state_violations(state(4, 0, 3, {3})).empty());
  CHECK_FALSE(state_violations(state(4, 0, 3, {1, 1})).empty());  // (4,2,0) is not a real type
  CHECK_FALSE(state_violations(state(4, 0, 3, {2})).empty());      // parity
}

TEST_CASE("seed and step json round trip") {
  const std::vector<BaseSeed> seeds{HyperellipticSeed{{4, 1, 0}, DegreeVector({2})}, HyperellipticR0Seed{3},
                                    GenericPencilSeed{3, 4}, GenericR0PencilSeed{2, 5}};
  for (const auto& s : seeds) CHECK(seed_from_json(to_json(s)) == s);
  const std::vector<ConstructionStep> steps{ConstructionStep::one(V::WithRealRam, "C1"),
                                            ConstructionStep::two(V::WithoutRealRam), ConstructionStep::three(),
                                            ConstructionStep::four(), ConstructionStep::five()};
  for (const auto& st : steps) CHECK(step_from_json(to_json(st), "/steps/0") == st);

  Json bad = to_json(ConstructionStep::one(V::WithRealRam, "C1"));
  bad["variant"] = "sideways";
  try {
    step_from_json(bad, "/steps/3");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.path() == "/steps/3/variant");
  }
}

TEST_CASE("state violations over the anisotropic conic") {
  CHECK(state_violations(state(2, 1, 3, {}, CoverTarget::AnisotropicConic)).empty());
  CHECK_FALSE(state_violations(state(2, 1, 4, {}, CoverTarget::AnisotropicConic)).empty());
  CHECK(state_violations(seed_state(HyperellipticR0Seed{3})).empty());
}
