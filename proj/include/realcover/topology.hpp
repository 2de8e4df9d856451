#pragma once

#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

namespace realcover {

using Json = nlohmann::ordered_json;

/// Malformed input. `path` names the offending field, e.g. "/deg/2".
class ParseError : public std::runtime_error {
 public:
  ParseError(std::string path, const std::string& what)
      : std::runtime_error(path + ": " + what), path_(std::move(path)) {}
  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

/// Topological type (g, s, a) of a smooth real curve: genus, number of real
/// circles, and a = 1 when the complement of the real locus is connected.
struct TopType {
  int g = 0;
  int s = 0;
  int a = 0;

  friend bool operator==(const TopType&, const TopType&) = default;
  friend auto operator<=>(const TopType&, const TopType&) = default;
};

enum class CoverTarget {
  ProjLine,          // P1
  AnisotropicConic,  // R0: genus 0, no real points
};

std::string to_string(CoverTarget target);
CoverTarget target_from_string(const std::string& text);

/// Topological degrees of a covering on the real components, stored sorted
/// non-increasing. Construction rejects negative or unsorted input.
class DegreeVector {
 public:
  DegreeVector() = default;
  explicit DegreeVector(std::vector<int> entries);

  /// Sorts first; still rejects negative entries.
  static DegreeVector canonical(std::vector<int> entries);
  static DegreeVector zeros(int count) { return DegreeVector(std::vector<int>(count, 0)); }

  const std::vector<int>& entries() const { return entries_; }
  int size() const { return static_cast<int>(entries_.size()); }
  bool empty() const { return entries_.empty(); }
  int sum() const;
  // s': number of non-zero entries
  int nonzero_count() const;
  int operator[](int i) const { return entries_[i]; }

  friend bool operator==(const DegreeVector&, const DegreeVector&) = default;
  friend auto operator<=>(const DegreeVector&, const DegreeVector&) = default;

 private:
  std::vector<int> entries_;
};

/// A requested covering: source type, target curve, degree k and degrees on
/// the real components. Fields are raw; the predicates below decide validity.
struct CoverSpec {
  TopType top;
  CoverTarget target = CoverTarget::ProjLine;
  int k = 2;
  DegreeVector degrees;

  friend bool operator==(const CoverSpec&, const CoverSpec&) = default;
};

bool weichold_admissible(int g, int s, int a);
inline bool weichold_admissible(const TopType& t) { return weichold_admissible(t.g, t.s, t.a); }

bool degree_admissible(const DegreeVector& degrees, int k);

/// Name of the first violated admissibility predicate, or nullopt when the
/// spec is admissible. Names: "degree", "shape", "weichold", "sum",
/// "parity", "zero-component", "separating", "r0-real-points",
/// "r0-orientability", "r0-parity".
std::optional<std::string> first_violation(const CoverSpec& spec);

inline bool target_admissible(const CoverSpec& spec) { return !first_violation(spec).has_value(); }

/// Calls `visit` with every non-increasing vector of length `length`, entries
/// in [0, max_entry], sum at most `max_sum`, in ascending lexicographic order.
void for_each_degree_vector(int length, int max_entry, int max_sum,
                            const std::function<void(const DegreeVector&)>& visit);

/// Admissible specs of a single genus, ordered by (s, a, target, k, deg).
std::vector<CoverSpec> enumerate_admissible_genus(int g, int k_max);

/// Every admissible spec with g <= g_max and 2 <= k <= k_max, ordered
/// lexicographically by (g, s, a, target, k, deg). `workers` > 1 fans the
/// genera out over threads; the output order does not depend on it.
std::vector<CoverSpec> enumerate_admissible(int g_max, int k_max, int workers = 1);

Json to_json(const CoverSpec& spec);
CoverSpec cover_spec_from_json(const Json& j, const std::string& path = "");
std::string to_string(const CoverSpec& spec);

}  // namespace realcover
