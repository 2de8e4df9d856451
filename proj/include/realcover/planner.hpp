#pragma once

#include <string>
#include <variant>
#include <vector>

#include "realcover/constructions.hpp"

namespace realcover {

/// Which existence argument produced a plan.
enum class CaseTag {
  A1SPos,         // a = 1, s >= 1
  A1S0SmallG,     // a = 1, s = 0, g < k
  A1S0BigG,       // a = 1, s = 0, g >= k
  Case1,          // a = 0, s = 1, delta = (k)
  Case2AllOnes,   // a = 0, sum = k, all ones
  Case2Big,       // a = 0, sum = k, delta_1 >= 2
  Case3,          // a = 0, sum < k, no zero degrees
  Case4,          // a = 0, sum < k, some zero degrees
  Case5,          // a = 0, all degrees zero
  R0BigK,         // target R0, k >= g + 1
  R0SmallK,       // target R0, k < g + 1
};

std::string to_string(CaseTag tag);
CaseTag case_tag_from_string(const std::string& text);

/// Certificate of existence: a base covering plus the constructions that
/// turn it into the requested one.
struct Plan {
  BaseSeed seed;
  std::vector<ConstructionStep> steps;
  CaseTag provenance = CaseTag::A1SPos;

  friend bool operator==(const Plan&, const Plan&) = default;
};

struct Infeasible {
  std::string reason;
  friend bool operator==(const Infeasible&, const Infeasible&) = default;
};

using PlanResult = std::variant<Plan, Infeasible>;

/// Infeasible exactly when the target is not admissible; P1 targets of
/// degree 2 are refused with reason "k=2 out of scope".
PlanResult plan(const CoverSpec& target);

struct Verification {
  bool verified = false;
  std::vector<std::string> trail;  // diagnostics, empty on success
};

/// Executes the plan, checks every intermediate state and compares the
/// canonical outcome with `target`.
Verification verify_plan(const Plan& plan, const CoverSpec& target);

Json to_json(const Plan& plan);
Plan plan_from_json(const Json& j);

}  // namespace realcover
