#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "realcover/topology.hpp"

namespace realcover {

enum class StepKind { I, II, III, IV, V };

/// Sign of the smoothing parameter: with real ramification (t > 0) or
/// without (t < 0). Only kinds I and II distinguish the two.
enum class Variant { WithRealRam, WithoutRealRam, NotApplicable };

std::string to_string(StepKind kind);
std::string to_string(Variant variant);

struct ConstructionStep {
  StepKind kind = StepKind::I;
  Variant variant = Variant::NotApplicable;
  std::optional<std::string> placement;  // component label, kind I only

  static ConstructionStep one(Variant v, std::string label) { return {StepKind::I, v, std::move(label)}; }
  static ConstructionStep two(Variant v) { return {StepKind::II, v, std::nullopt}; }
  static ConstructionStep three() { return {StepKind::III, Variant::NotApplicable, std::nullopt}; }
  static ConstructionStep four() { return {StepKind::IV, Variant::NotApplicable, std::nullopt}; }
  static ConstructionStep five() { return {StepKind::V, Variant::NotApplicable, std::nullopt}; }

  friend bool operator==(const ConstructionStep&, const ConstructionStep&) = default;
};

/// Throws std::invalid_argument when the variant or placement does not fit the kind.
void validate_step(const ConstructionStep& step);

/// A double covering of P1 by a real hyperelliptic curve.
struct HyperellipticSeed {
  TopType top;
  DegreeVector degrees;
  friend bool operator==(const HyperellipticSeed&, const HyperellipticSeed&) = default;
};

/// Double covering of R0 by a genus-g curve without real points, g odd.
struct HyperellipticR0Seed {
  int g = 1;
  friend bool operator==(const HyperellipticR0Seed&, const HyperellipticR0Seed&) = default;
};

/// A general real pencil of even degree k on a curve without real points, g < k.
struct GenericPencilSeed {
  int g = 0;
  int k = 2;
  friend bool operator==(const GenericPencilSeed&, const GenericPencilSeed&) = default;
};

/// A morphism to R0 of degree k >= g + 1 with k = g + 1 mod 2.
struct GenericR0PencilSeed {
  int g = 0;
  int k = 1;
  friend bool operator==(const GenericR0PencilSeed&, const GenericR0PencilSeed&) = default;
};

using BaseSeed = std::variant<HyperellipticSeed, HyperellipticR0Seed, GenericPencilSeed, GenericR0PencilSeed>;

struct Component {
  std::string label;
  int delta = 0;
  friend bool operator==(const Component&, const Component&) = default;
};

/// Covering state with component identity. Components are kept in creation
/// order; seed components are "C1".."Cs", step-created ones "N1", "N2", ...
struct LabeledState {
  int g = 0;
  int a = 1;
  int k = 2;
  CoverTarget target = CoverTarget::ProjLine;
  std::vector<Component> components;
  int created = 0;  // number of "N" labels handed out

  int s() const { return static_cast<int>(components.size()); }
  int degree_sum() const;
  const Component* find(const std::string& label) const;

  friend bool operator==(const LabeledState&, const LabeledState&) = default;
};

class PreconditionViolated : public std::runtime_error {
 public:
  PreconditionViolated(StepKind kind, std::string reason, std::optional<std::size_t> step_index = std::nullopt);

  StepKind kind() const { return kind_; }
  const std::string& reason() const { return reason_; }
  std::optional<std::size_t> step_index() const { return step_index_; }

 private:
  StepKind kind_;
  std::string reason_;
  std::optional<std::size_t> step_index_;
};

class SeedNotInCatalog : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

LabeledState apply_step(const LabeledState& state, const ConstructionStep& step);
LabeledState seed_state(const BaseSeed& seed);

/// Forgets labels and sorts degrees.
CoverSpec canonicalize(const LabeledState& state);

/// Invariant violations of a state (degree sum, parity, Weichold type);
/// empty when the state is valid.
std::vector<std::string> state_violations(const LabeledState& state);

/// Seed state followed by the state after each step. Throws
/// PreconditionViolated carrying the failing step index.
std::vector<LabeledState> execute_trace(const BaseSeed& seed, std::span<const ConstructionStep> steps);

CoverSpec execute(const BaseSeed& seed, std::span<const ConstructionStep> steps);

Json to_json(const BaseSeed& seed);
Json to_json(const ConstructionStep& step);
BaseSeed seed_from_json(const Json& j, const std::string& path = "/seed");
ConstructionStep step_from_json(const Json& j, const std::string& path);

}  // namespace realcover
