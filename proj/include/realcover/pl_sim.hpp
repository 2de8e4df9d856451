#pragma once

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "realcover/constructions.hpp"
#include "realcover/planner.hpp"
#include "realcover/rational.hpp"

namespace realcover {

/// Piecewise-linear map from the source circle (parameter t, period 1) to the
/// target circle, given by a lift to the real line. Between breakpoints the
/// lift is linear; the last segment runs to (1, x_0 + winding).
class PLMap {
 public:
  struct Breakpoint {
    Rational t;
    Rational x;
    friend bool operator==(const Breakpoint&, const Breakpoint&) = default;
  };

  struct Segment {
    Rational t0, x0, t1, x1;
    bool ascending() const { return x1 > x0; }
  };

  /// Validates: at least 2 breakpoints, t strictly increasing in [0, 1),
  /// no segment of zero slope (closure included).
  PLMap(std::vector<Breakpoint> breakpoints, long winding);

  /// Breakpoints at t = i / n for the given lifts.
  static PLMap from_lifts(std::vector<Rational> lifts, long winding);

  const std::vector<Breakpoint>& breakpoints() const { return breakpoints_; }
  long winding() const { return winding_; }
  std::vector<Rational> lifts() const;

  std::size_t segment_count() const { return breakpoints_.size(); }
  Segment segment(std::size_t i) const;

  /// Same map traversed backwards (winding negated).
  PLMap reversed() const;

  Rational min_lift() const;
  Rational max_lift() const;

  friend bool operator==(const PLMap&, const PLMap&) = default;

 private:
  std::vector<Breakpoint> breakpoints_;
  long winding_ = 0;
};

long winding(const PLMap& m);

struct LabeledMap {
  std::string label;
  PLMap map;
};

/// Real locus of a covering: one circle map per real component plus the
/// total degree k (complex sheets are only counted).
struct PLCover {
  std::vector<LabeledMap> components;
  int k = 2;
  CoverTarget target = CoverTarget::ProjLine;

  const LabeledMap* find(const std::string& label) const;
  LabeledMap* find(const std::string& label);
};

class SingularValue : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Images mod 1 of all breakpoints, sorted, in [0, 1).
std::vector<Rational> critical_values(const PLCover& c);

struct FiberPoint {
  std::string label;
  Rational t;
};

/// All preimages of x (mod 1) in component order, t increasing within a
/// component. Throws SingularValue when x is a breakpoint image.
std::vector<FiberPoint> fiber(const PLCover& c, const Rational& x);
int fiber_size(const PLCover& c, const Rational& x);

/// Regular values to probe: one per interval between consecutive critical
/// values, plus a 100-point grid nudged off the critical set.
std::vector<Rational> sample_values(const PLCover& c);

struct FiberCheck {
  bool ok = true;
  std::size_t samples = 0;
  std::string problem;  // first violation, if any
};

/// Every sampled fiber has size <= k and size = k (mod 2).
FiberCheck check_fibers(const PLCover& c);

/// Closed arc of the target circle, counterclockwise from start to end.
class Arc {
 public:
  static Arc full_circle() { return Arc(); }
  /// Normalizes start into [0, 1); start and end must differ mod 1.
  static Arc between(const Rational& start, const Rational& end);

  bool is_full() const { return full_; }
  const Rational& start() const { return start_; }
  const Rational& end() const { return end_; }
  Rational length() const;
  bool contains(const Rational& x) const;

  friend bool operator==(const Arc&, const Arc&) = default;

 private:
  Arc() = default;
  bool full_ = true;
  Rational start_;
  Rational end_;
};

std::string to_string(const Arc& arc);

struct LabeledArc {
  std::string label;
  Arc arc;
};

std::vector<LabeledArc> image_arcs(const PLCover& c);

/// Fewest arcs whose union is the whole circle; nullopt when all of them
/// together still miss a point.
std::optional<int> min_circle_cover(std::span<const Arc> arcs);

/// Where a surgery happens. Unset fields select the canonical site: the
/// midpoint of the largest admissible interval between critical values.
struct SurgerySite {
  std::optional<Rational> value;
  std::string new_label;  // label for a component created by II/ram or III
};

/// Real-locus counterpart of one construction step. Throws
/// PreconditionViolated or BudgetExceeded.
PLCover surgery(const PLCover& c, const ConstructionStep& step, const SurgerySite& site = {});

PLCover realize_seed(const BaseSeed& seed);

/// Seed realization followed by one surgery per step, labels matching the
/// symbolic executor.
PLCover realize(const Plan& plan);

Json to_json(const PLCover& c);
PLCover pl_cover_from_json(const Json& j);

/// "x,fiber_count" rows over sample_values.
std::string fiber_csv(const PLCover& c);

}  // namespace realcover
