#include "realcover/planner.hpp"

#include <array>
#include <utility>

#include "realcover/json_util.hpp"

namespace realcover {

namespace {

constexpr std::array<std::pair<CaseTag, const char*>, 11> kTagNames{{
    {CaseTag::A1SPos, "A1-sPos"},
    {CaseTag::A1S0SmallG, "A1-s0-small-g"},
    {CaseTag::A1S0BigG, "A1-s0-big-g"},
    {CaseTag::Case1, "Case1"},
    {CaseTag::Case2AllOnes, "Case2-all1"},
    {CaseTag::Case2Big, "Case2-big"},
    {CaseTag::Case3, "Case3"},
    {CaseTag::Case4, "Case4"},
    {CaseTag::Case5, "Case5"},
    {CaseTag::R0BigK, "R0-big-k"},
    {CaseTag::R0SmallK, "R0-small-k"},
}};

std::string seed_label(int i) { return "C" + std::to_string(i); }
std::string new_label(int i) { return "N" + std::to_string(i); }

void repeat(std::vector<ConstructionStep>& steps, int times, const ConstructionStep& step) {
  for (int i = 0; i < times; ++i) steps.push_back(step);
}

void alternate_on(std::vector<ConstructionStep>& steps, int times, const std::string& label) {
  for (int i = 0; i < times; ++i)
    steps.push_back(ConstructionStep::one(i % 2 == 0 ? Variant::WithRealRam : Variant::WithoutRealRam, label));
}

// Non-zero entries of delta, largest first.
std::vector<int> nonzero_part(const DegreeVector& degrees) {
  std::vector<int> out;
  for (int d : degrees.entries())
    if (d != 0) out.push_back(d);
  return out;
}

Plan plan_a1_positive(const CoverSpec& t) {
  const auto nonzero = nonzero_part(t.degrees);
  const int s_prime = static_cast<int>(nonzero.size());
  const int zeros = t.top.s - s_prime;
  Plan p;
  p.provenance = CaseTag::A1SPos;
  p.seed = HyperellipticSeed{{t.top.g - s_prime, zeros, 1}, DegreeVector::zeros(zeros)};
  repeat(p.steps, s_prime, ConstructionStep::three());
  for (int i = 0; i < s_prime; ++i)
    repeat(p.steps, nonzero[i] - 1, ConstructionStep::one(Variant::WithoutRealRam, new_label(i + 1)));
  const int remainder = t.k - 2 - t.degrees.sum();
  if (zeros > 0) {
    // ram twice on a degree-0 component goes 0 -> 1 -> 0
    repeat(p.steps, remainder, ConstructionStep::one(Variant::WithRealRam, seed_label(1)));
  } else {
    alternate_on(p.steps, remainder, new_label(1));
  }
  return p;
}

Plan plan_a1_empty(const CoverSpec& t) {
  Plan p;
  if (t.top.g < t.k) {
    p.provenance = CaseTag::A1S0SmallG;
    p.seed = GenericPencilSeed{t.top.g, t.k};
    return p;
  }
  p.provenance = CaseTag::A1S0BigG;
  p.seed = HyperellipticSeed{{t.top.g - t.k / 2 + 1, 0, 1}, {}};
  repeat(p.steps, t.k / 2 - 1, ConstructionStep::four());
  return p;
}

// Case 3 body for genus g with all-nonzero degrees `delta` and degree k.
Plan plan_case3(int g, const std::vector<int>& delta, int k) {
  const int s_prime = static_cast<int>(delta.size());
  int total = 0;
  for (int d : delta) total += d;
  Plan p;
  p.provenance = CaseTag::Case3;
  p.seed = HyperellipticSeed{{g - s_prime + 1, 1, 0}, DegreeVector({2})};
  p.steps.push_back(ConstructionStep::one(Variant::WithRealRam, seed_label(1)));
  repeat(p.steps, s_prime - 1, ConstructionStep::three());
  repeat(p.steps, delta[0] - 1, ConstructionStep::one(Variant::WithoutRealRam, seed_label(1)));
  for (int i = 1; i < s_prime; ++i)
    repeat(p.steps, delta[i] - 1, ConstructionStep::one(Variant::WithoutRealRam, new_label(i)));
  alternate_on(p.steps, k - total - 2, seed_label(1));
  return p;
}

Plan plan_a0(const CoverSpec& t) {
  const int g = t.top.g;
  const int s = t.top.s;
  const int k = t.k;
  const auto nonzero = nonzero_part(t.degrees);
  const int s_prime = static_cast<int>(nonzero.size());
  const int total = t.degrees.sum();
  Plan p;

  if (s_prime == 0) {
    p.provenance = CaseTag::Case5;
    p.seed = HyperellipticSeed{{g - s + 1, 1, 0}, DegreeVector({2})};
    repeat(p.steps, k - 2, ConstructionStep::one(Variant::WithRealRam, seed_label(1)));
    repeat(p.steps, s - 1, ConstructionStep::two(Variant::WithRealRam));
    return p;
  }

  if (total == k) {
    if (s == 1) {
      p.provenance = CaseTag::Case1;
      p.seed = HyperellipticSeed{{g, 1, 0}, DegreeVector({2})};
      repeat(p.steps, k - 2, ConstructionStep::one(Variant::WithoutRealRam, seed_label(1)));
      return p;
    }
    if (nonzero.front() == 1) {
      // s = k and g = k + 1 mod 2, so the seed genus g - k + 2 is odd and >= 1
      p.provenance = CaseTag::Case2AllOnes;
      p.seed = HyperellipticSeed{{g - k + 2, 2, 0}, DegreeVector({1, 1})};
      repeat(p.steps, k - 2, ConstructionStep::three());
      return p;
    }
    p.provenance = CaseTag::Case2Big;
    p.seed = HyperellipticSeed{{g - s + 1, 1, 0}, DegreeVector({2})};
    repeat(p.steps, s - 1, ConstructionStep::three());
    repeat(p.steps, nonzero[0] - 2, ConstructionStep::one(Variant::WithoutRealRam, seed_label(1)));
    for (int i = 1; i < s; ++i)
      repeat(p.steps, nonzero[i] - 1, ConstructionStep::one(Variant::WithoutRealRam, new_label(i)));
    return p;
  }

  if (s_prime == s) return plan_case3(g, nonzero, k);

  p = plan_case3(g - s + s_prime, nonzero, k);
  p.provenance = CaseTag::Case4;
  repeat(p.steps, s - s_prime, ConstructionStep::two(Variant::WithRealRam));
  return p;
}

Plan plan_r0(const CoverSpec& t) {
  Plan p;
  if (t.k >= t.top.g + 1) {
    p.provenance = CaseTag::R0BigK;
    p.seed = GenericR0PencilSeed{t.top.g, t.k};
    return p;
  }
  p.provenance = CaseTag::R0SmallK;
  p.seed = HyperellipticR0Seed{t.top.g - t.k + 2};
  repeat(p.steps, t.k - 2, ConstructionStep::five());
  return p;
}

}  // namespace

std::string to_string(CaseTag tag) {
  for (const auto& [t, name] : kTagNames)
    if (t == tag) return name;
  return "?";
}

CaseTag case_tag_from_string(const std::string& text) {
  for (const auto& [t, name] : kTagNames)
    if (text == name) return t;
  throw std::invalid_argument("unknown provenance tag '" + text + "'");
}

PlanResult plan(const CoverSpec& target) {
  if (auto violation = first_violation(target)) return Infeasible{*violation};
  if (target.target == CoverTarget::AnisotropicConic) return plan_r0(target);
  if (target.k == 2) return Infeasible{"k=2 out of scope"};
  if (target.top.a == 1) return target.top.s == 0 ? plan_a1_empty(target) : plan_a1_positive(target);
  return plan_a0(target);
}

Verification verify_plan(const Plan& plan, const CoverSpec& target) {
  Verification out;
  std::vector<LabeledState> trace;
  try {
    trace = execute_trace(plan.seed, plan.steps);
  } catch (const PreconditionViolated& e) {
    out.trail.push_back(e.what());
    return out;
  } catch (const SeedNotInCatalog& e) {
    out.trail.push_back(std::string("seed: ") + e.what());
    return out;
  }
  for (std::size_t i = 0; i < trace.size(); ++i) {
    for (const auto& v : state_violations(trace[i]))
      out.trail.push_back((i == 0 ? std::string("seed") : "after step " + std::to_string(i - 1)) + ": " + v);
  }
  const CoverSpec result = canonicalize(trace.back());
  if (!(result == target))
    out.trail.push_back("plan yields " + to_string(result) + " but target is " + to_string(target));
  out.verified = out.trail.empty();
  return out;
}

Json to_json(const Plan& plan) {
  Json j;
  j["seed"] = to_json(plan.seed);
  j["steps"] = Json::array();
  for (const auto& step : plan.steps) j["steps"].push_back(to_json(step));
  j["provenance"] = to_string(plan.provenance);
  return j;
}

Plan plan_from_json(const Json& j) {
  Plan p;
  p.seed = seed_from_json(detail::require_field(j, "", "seed"), "/seed");
  const Json& steps = detail::require_field(j, "", "steps");
  if (!steps.is_array()) throw ParseError("/steps", "expected an array");
  for (std::size_t i = 0; i < steps.size(); ++i)
    p.steps.push_back(step_from_json(steps[i], "/steps/" + std::to_string(i)));
  const std::string tag = detail::require_string(j, "", "provenance");
  try {
    p.provenance = case_tag_from_string(tag);
  } catch (const std::invalid_argument& e) {
    throw ParseError("/provenance", e.what());
  }
  return p;
}

}  // namespace realcover
