#include "realcover/constructions.hpp"

#include <algorithm>
#include <cstdlib>

#include "realcover/json_util.hpp"

namespace realcover {

std::string to_string(StepKind kind) {
  switch (kind) {
    case StepKind::I: return "I";
    case StepKind::II: return "II";
    case StepKind::III: return "III";
    case StepKind::IV: return "IV";
    case StepKind::V: return "V";
  }
  return "?";
}

std::string to_string(Variant variant) {
  switch (variant) {
    case Variant::WithRealRam: return "ram";
    case Variant::WithoutRealRam: return "noram";
    case Variant::NotApplicable: return "none";
  }
  return "?";
}

void validate_step(const ConstructionStep& step) {
  const bool two_sided = step.kind == StepKind::I || step.kind == StepKind::II;
  if (two_sided && step.variant == Variant::NotApplicable)
    throw std::invalid_argument("construction " + to_string(step.kind) + " needs a deformation variant");
  if (!two_sided && step.variant != Variant::NotApplicable)
    throw std::invalid_argument("construction " + to_string(step.kind) + " takes no deformation variant");
  if (step.kind == StepKind::I && !step.placement)
    throw std::invalid_argument("construction I needs a component placement");
  if (step.kind != StepKind::I && step.placement)
    throw std::invalid_argument("construction " + to_string(step.kind) + " takes no placement");
}

int LabeledState::degree_sum() const {
  int total = 0;
  for (const auto& c : components) total += c.delta;
  return total;
}

const Component* LabeledState::find(const std::string& label) const {
  auto it = std::find_if(components.begin(), components.end(), [&](const Component& c) { return c.label == label; });
  return it == components.end() ? nullptr : &*it;
}

PreconditionViolated::PreconditionViolated(StepKind kind, std::string reason, std::optional<std::size_t> step_index)
    : std::runtime_error("construction " + to_string(kind) + ": " + reason +
                         (step_index ? " (step " + std::to_string(*step_index) + ")" : "")),
      kind_(kind),
      reason_(std::move(reason)),
      step_index_(step_index) {}

namespace {

void require(bool ok, StepKind kind, const char* reason) {
  if (!ok) throw PreconditionViolated(kind, reason);
}

std::string fresh_label(LabeledState& state) { return "N" + std::to_string(++state.created); }

}  // namespace

LabeledState apply_step(const LabeledState& state, const ConstructionStep& step) {
  try {
    validate_step(step);
  } catch (const std::invalid_argument& e) {
    throw PreconditionViolated(step.kind, e.what());
  }
  const bool on_line = state.target == CoverTarget::ProjLine;
  LabeledState next = state;
  switch (step.kind) {
    case StepKind::I: {
      require(on_line, step.kind, "target must be P1");
      require(state.s() >= 1, step.kind, "no real component to attach to");
      auto it = std::find_if(next.components.begin(), next.components.end(),
                             [&](const Component& c) { return c.label == *step.placement; });
      require(it != next.components.end(), step.kind, "placement names no existing component");
      // With real ramification the attached line is reversed; at delta 0 the
      // orientation of the new component flips so the degree becomes 1.
      it->delta = step.variant == Variant::WithRealRam ? std::abs(it->delta - 1) : it->delta + 1;
      next.k += 1;
      break;
    }
    case StepKind::II: {
      require(on_line, step.kind, "target must be P1");
      require(state.degree_sum() < state.k, step.kind, "no non-real pair over a real value (sum of degrees = k)");
      next.g += 1;
      if (step.variant == Variant::WithRealRam) {
        next.components.push_back({fresh_label(next), 0});
      } else {
        next.a = 1;
      }
      break;
    }
    case StepKind::III:
      require(on_line, step.kind, "target must be P1");
      next.g += 1;
      next.k += 1;
      next.components.push_back({fresh_label(next), 1});
      break;
    case StepKind::IV:
      require(on_line, step.kind, "target must be P1");
      require(state.s() == 0, step.kind, "curve must have no real points");
      next.g += 1;
      next.k += 2;
      break;
    case StepKind::V:
      require(state.target == CoverTarget::AnisotropicConic, step.kind, "target must be R0");
      next.g += 1;
      next.k += 1;
      break;
  }
  return next;
}

namespace {

bool in_catalog(const HyperellipticSeed& seed) {
  const auto& d = seed.degrees.entries();
  const TopType& t = seed.top;
  if (std::all_of(d.begin(), d.end(), [](int x) { return x == 0; })) return true;
  if (d == std::vector<int>{2}) return t.s == 1 && t.a == 0;
  if (d == std::vector<int>{1, 1}) return t.s == 2 && t.a == 0;
  return false;
}

LabeledState seed_components(int g, int a, int k, CoverTarget target, const DegreeVector& degrees) {
  LabeledState state;
  state.g = g;
  state.a = a;
  state.k = k;
  state.target = target;
  for (int i = 0; i < degrees.size(); ++i) state.components.push_back({"C" + std::to_string(i + 1), degrees[i]});
  return state;
}

struct SeedVisitor {
  LabeledState operator()(const HyperellipticSeed& seed) const {
    if (!weichold_admissible(seed.top)) throw SeedNotInCatalog("hyperelliptic seed type is not Weichold-admissible");
    if (seed.degrees.size() != seed.top.s) throw SeedNotInCatalog("hyperelliptic seed degree vector has wrong length");
    if (!in_catalog(seed)) throw SeedNotInCatalog("hyperelliptic seed degrees not in catalog");
    return seed_components(seed.top.g, seed.top.a, 2, CoverTarget::ProjLine, seed.degrees);
  }
  LabeledState operator()(const HyperellipticR0Seed& seed) const {
    if (seed.g < 1 || seed.g % 2 == 0) throw SeedNotInCatalog("double covering of R0 needs odd genus");
    return seed_components(seed.g, 1, 2, CoverTarget::AnisotropicConic, {});
  }
  LabeledState operator()(const GenericPencilSeed& seed) const {
    if (seed.g < 0 || seed.k < 2 || seed.k % 2 != 0 || seed.g >= seed.k)
      throw SeedNotInCatalog("generic pencil needs even k > g");
    return seed_components(seed.g, 1, seed.k, CoverTarget::ProjLine, {});
  }
  LabeledState operator()(const GenericR0PencilSeed& seed) const {
    if (seed.g < 0 || seed.k < 2 || seed.k < seed.g + 1 || (seed.k - seed.g - 1) % 2 != 0)
      throw SeedNotInCatalog("generic R0 pencil needs k >= g + 1 and k = g + 1 mod 2");
    return seed_components(seed.g, 1, seed.k, CoverTarget::AnisotropicConic, {});
  }
};

}  // namespace

LabeledState seed_state(const BaseSeed& seed) { return std::visit(SeedVisitor{}, seed); }

CoverSpec canonicalize(const LabeledState& state) {
  std::vector<int> deltas;
  for (const auto& c : state.components) deltas.push_back(c.delta);
  return CoverSpec{{state.g, state.s(), state.a}, state.target, state.k, DegreeVector::canonical(std::move(deltas))};
}

std::vector<std::string> state_violations(const LabeledState& state) {
  std::vector<std::string> out;
  if (!weichold_admissible(state.g, state.s(), state.a)) out.push_back("type is not Weichold-admissible");
  if (state.target == CoverTarget::AnisotropicConic) {
    // a real fiber over R0 is empty, so only the degree parity is constrained
    if (state.s() != 0) out.push_back("R0 covering with real points");
    if ((state.k - state.g - 1) % 2 != 0) out.push_back("R0 covering with k - g even");
    return out;
  }
  const int total = state.degree_sum();
  if (total > state.k) out.push_back("sum of degrees exceeds k");
  if ((state.k - total) % 2 != 0) out.push_back("k - sum of degrees is odd");
  return out;
}

std::vector<LabeledState> execute_trace(const BaseSeed& seed, std::span<const ConstructionStep> steps) {
  std::vector<LabeledState> trace;
  trace.reserve(steps.size() + 1);
  trace.push_back(seed_state(seed));
  for (std::size_t i = 0; i < steps.size(); ++i) {
    try {
      trace.push_back(apply_step(trace.back(), steps[i]));
    } catch (const PreconditionViolated& e) {
      throw PreconditionViolated(e.kind(), e.reason(), i);
    }
  }
  return trace;
}

CoverSpec execute(const BaseSeed& seed, std::span<const ConstructionStep> steps) {
  return canonicalize(execute_trace(seed, steps).back());
}

namespace {

struct SeedJson {
  Json operator()(const HyperellipticSeed& s) const {
    Json j;
    j["type"] = "hyperelliptic";
    j["g"] = s.top.g;
    j["s"] = s.top.s;
    j["a"] = s.top.a;
    j["deg"] = s.degrees.entries();
    return j;
  }
  Json operator()(const HyperellipticR0Seed& s) const {
    Json j;
    j["type"] = "hyperelliptic_r0";
    j["g"] = s.g;
    return j;
  }
  Json operator()(const GenericPencilSeed& s) const {
    Json j;
    j["type"] = "generic_pencil";
    j["g"] = s.g;
    j["k"] = s.k;
    return j;
  }
  Json operator()(const GenericR0PencilSeed& s) const {
    Json j;
    j["type"] = "generic_r0_pencil";
    j["g"] = s.g;
    j["k"] = s.k;
    return j;
  }
};

}  // namespace

Json to_json(const BaseSeed& seed) { return std::visit(SeedJson{}, seed); }

Json to_json(const ConstructionStep& step) {
  Json j;
  j["kind"] = to_string(step.kind);
  if (step.variant == Variant::NotApplicable)
    j["variant"] = nullptr;
  else
    j["variant"] = to_string(step.variant);
  if (step.placement)
    j["placement"] = *step.placement;
  else
    j["placement"] = nullptr;
  return j;
}

BaseSeed seed_from_json(const Json& j, const std::string& path) {
  using detail::require_field;
  using detail::require_int;
  const std::string type = detail::require_string(j, path, "type");
  if (type == "hyperelliptic") {
    HyperellipticSeed seed;
    seed.top = {require_int(j, path, "g"), require_int(j, path, "s"), require_int(j, path, "a")};
    const Json& deg = require_field(j, path, "deg");
    if (!deg.is_array()) throw ParseError(path + "/deg", "expected an array");
    std::vector<int> entries;
    for (std::size_t i = 0; i < deg.size(); ++i) {
      if (!deg[i].is_number_integer()) throw ParseError(path + "/deg/" + std::to_string(i), "expected an integer");
      entries.push_back(deg[i].get<int>());
    }
    try {
      seed.degrees = DegreeVector(std::move(entries));
    } catch (const std::invalid_argument& e) {
      throw ParseError(path + "/deg", e.what());
    }
    return seed;
  }
  if (type == "hyperelliptic_r0") return HyperellipticR0Seed{require_int(j, path, "g")};
  if (type == "generic_pencil") return GenericPencilSeed{require_int(j, path, "g"), require_int(j, path, "k")};
  if (type == "generic_r0_pencil") return GenericR0PencilSeed{require_int(j, path, "g"), require_int(j, path, "k")};
  throw ParseError(path + "/type", "unknown seed type '" + type + "'");
}

ConstructionStep step_from_json(const Json& j, const std::string& path) {
  ConstructionStep step;
  const std::string kind = detail::require_string(j, path, "kind");
  if (kind == "I")
    step.kind = StepKind::I;
  else if (kind == "II")
    step.kind = StepKind::II;
  else if (kind == "III")
    step.kind = StepKind::III;
  else if (kind == "IV")
    step.kind = StepKind::IV;
  else if (kind == "V")
    step.kind = StepKind::V;
  else
    throw ParseError(path + "/kind", "unknown construction '" + kind + "'");

  const Json& variant = detail::require_field(j, path, "variant");
  if (variant.is_null())
    step.variant = Variant::NotApplicable;
  else if (variant == "ram")
    step.variant = Variant::WithRealRam;
  else if (variant == "noram")
    step.variant = Variant::WithoutRealRam;
  else
    throw ParseError(path + "/variant", "expected \"ram\", \"noram\" or null");

  const Json& placement = detail::require_field(j, path, "placement");
  if (placement.is_string())
    step.placement = placement.get<std::string>();
  else if (!placement.is_null())
    throw ParseError(path + "/placement", "expected a label or null");

  try {
    validate_step(step);
  } catch (const std::invalid_argument& e) {
    throw ParseError(path, e.what());
  }
  return step;
}

}  // namespace realcover
