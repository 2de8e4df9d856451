#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "realcover/pl_sim.hpp"

namespace realcover {

/// Requested type (g, s, a), s >= 1, and covering number 1 <= kcov <= s.
struct CoveringNumberTarget {
  TopType top;
  int kcov = 1;
};

class InfeasibleTarget : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// 0 when the real locus does not map onto the real line, otherwise the
/// fewest components whose images cover it.
int covering_number(const PLCover& c);

/// Degree-4 covering with all topological degrees 0 realizing the target.
struct CovnumBuild {
  PLCover cover;
  CoverSpec spec;
  std::vector<std::string> cycle;  // components forming the minimal cover
};

CovnumBuild build_covnum(const CoveringNumberTarget& target);

// Gluing primitives, exposed for testing.

/// Smooths a real node joining `first` and `second` over `value` (both must
/// pass through it ascending); the merged component keeps the first label.
/// The two new fold points sit at value -/+ eps.
PLCover smooth_merge(const PLCover& c, const std::string& first, const std::string& second, const Rational& value,
                     const Rational& eps);

/// Merge at the canonical site: midpoint of the largest regular interval
/// over which both components ascend.
PLCover smooth_merge(const PLCover& c, const std::string& first, const std::string& second);

/// Smooths a real node joining two opposite passes of one winding-0
/// component over `value` (the highest lift level is used). The part above
/// the node becomes a new component `new_label`.
PLCover smooth_split(const PLCover& c, const std::string& label, const Rational& value, const Rational& eps,
                     const std::string& new_label);

/// Pre-merge arcs of the two hyperelliptic M-curves in the even-genus
/// recipe, genus g' = g / 2 each. Labels "Y1.j" and "Y2.j".
std::vector<LabeledArc> m_curve_pair_layout(int half_genus);

Json to_json(const CovnumBuild& build);

}  // namespace realcover
