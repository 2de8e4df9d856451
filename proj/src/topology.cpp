#include "realcover/topology.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <thread>

#include "realcover/json_util.hpp"

namespace realcover {

std::string to_string(CoverTarget target) {
  return target == CoverTarget::ProjLine ? "P1" : "R0";
}

CoverTarget target_from_string(const std::string& text) {
  if (text == "P1") return CoverTarget::ProjLine;
  if (text == "R0") return CoverTarget::AnisotropicConic;
  throw std::invalid_argument("unknown target '" + text + "'");
}

DegreeVector::DegreeVector(std::vector<int> entries) : entries_(std::move(entries)) {
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (entries_[i] < 0) throw std::invalid_argument("negative topological degree");
    if (i > 0 && entries_[i] > entries_[i - 1])
      throw std::invalid_argument("degree vector not sorted non-increasing");
  }
}

DegreeVector DegreeVector::canonical(std::vector<int> entries) {
  std::sort(entries.begin(), entries.end(), std::greater<>());
  return DegreeVector(std::move(entries));
}

int DegreeVector::sum() const { return std::accumulate(entries_.begin(), entries_.end(), 0); }

int DegreeVector::nonzero_count() const {
  return static_cast<int>(std::count_if(entries_.begin(), entries_.end(), [](int d) { return d != 0; }));
}

bool weichold_admissible(int g, int s, int a) {
  if (g < 0 || s < 0) return false;
  if (a == 1) return s <= g;
  if (a == 0) return s >= 1 && s <= g + 1 && (s - g - 1) % 2 == 0;
  return false;
}

bool degree_admissible(const DegreeVector& degrees, int k) {
  const int total = degrees.sum();
  if (total > k) return false;
  if ((k - total) % 2 != 0) return false;
  // For s = 0 the zero-component clause is vacuous.
  if (!degrees.empty() && degrees[degrees.size() - 1] == 0 && total > k - 2) return false;
  return true;
}

std::optional<std::string> first_violation(const CoverSpec& spec) {
  const TopType& t = spec.top;
  if (spec.k < 2) return "degree";
  if (spec.degrees.size() != t.s) return "shape";
  if (!weichold_admissible(t)) return "weichold";
  const int total = spec.degrees.sum();
  if (spec.target == CoverTarget::ProjLine) {
    if (total > spec.k) return "sum";
    if ((spec.k - total) % 2 != 0) return "parity";
    if (!spec.degrees.empty() && spec.degrees[t.s - 1] == 0 && total > spec.k - 2) return "zero-component";
    if (t.a == 1 && total > spec.k - 2) return "separating";
    return std::nullopt;
  }
  if (t.s != 0) return "r0-real-points";
  if (t.a != 1) return "r0-orientability";
  if ((spec.k - t.g - 1) % 2 != 0) return "r0-parity";
  return std::nullopt;
}

namespace {

void degree_vectors_rec(std::vector<int>& prefix, int remaining, int cap, int max_sum,
                        const std::function<void(const DegreeVector&)>& visit) {
  if (remaining == 0) {
    visit(DegreeVector(prefix));
    return;
  }
  for (int d = 0; d <= std::min(cap, max_sum); ++d) {
    prefix.push_back(d);
    degree_vectors_rec(prefix, remaining - 1, d, max_sum - d, visit);
    prefix.pop_back();
  }
}

}  // namespace

void for_each_degree_vector(int length, int max_entry, int max_sum,
                            const std::function<void(const DegreeVector&)>& visit) {
  std::vector<int> prefix;
  prefix.reserve(length);
  degree_vectors_rec(prefix, length, max_entry, max_sum, visit);
}

std::vector<CoverSpec> enumerate_admissible_genus(int g, int k_max) {
  std::vector<CoverSpec> out;
  for (int s = 0; s <= g + 1; ++s) {
    for (int a = 0; a <= 1; ++a) {
      if (!weichold_admissible(g, s, a)) continue;
      for (CoverTarget target : {CoverTarget::ProjLine, CoverTarget::AnisotropicConic}) {
        for (int k = 2; k <= k_max; ++k) {
          for_each_degree_vector(s, k, k, [&](const DegreeVector& deg) {
            CoverSpec spec{{g, s, a}, target, k, deg};
            if (target_admissible(spec)) out.push_back(std::move(spec));
          });
        }
      }
    }
  }
  return out;
}

std::vector<CoverSpec> enumerate_admissible(int g_max, int k_max, int workers) {
  const int genera = g_max + 1;
  std::vector<std::vector<CoverSpec>> per_genus(genera);
  workers = std::clamp(workers, 1, std::max(genera, 1));
  if (workers == 1) {
    for (int g = 0; g < genera; ++g) per_genus[g] = enumerate_admissible_genus(g, k_max);
  } else {
    std::vector<std::jthread> pool;
    for (int w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        for (int g = w; g < genera; g += workers) per_genus[g] = enumerate_admissible_genus(g, k_max);
      });
    }
  }
  std::vector<CoverSpec> out;
  for (auto& chunk : per_genus) std::move(chunk.begin(), chunk.end(), std::back_inserter(out));
  return out;
}

Json to_json(const CoverSpec& spec) {
  Json j;
  j["g"] = spec.top.g;
  j["s"] = spec.top.s;
  j["a"] = spec.top.a;
  j["target"] = to_string(spec.target);
  j["k"] = spec.k;
  j["deg"] = spec.degrees.entries();
  return j;
}

CoverSpec cover_spec_from_json(const Json& j, const std::string& path) {
  using detail::require_field;
  using detail::require_int;
  CoverSpec spec;
  spec.top.g = require_int(j, path, "g");
  spec.top.s = require_int(j, path, "s");
  spec.top.a = require_int(j, path, "a");
  if (spec.top.g < 0) throw ParseError(path + "/g", "genus must be non-negative");
  if (spec.top.s < 0) throw ParseError(path + "/s", "s must be non-negative");
  if (spec.top.a != 0 && spec.top.a != 1) throw ParseError(path + "/a", "a must be 0 or 1");
  const std::string target = detail::require_string(j, path, "target");
  try {
    spec.target = target_from_string(target);
  } catch (const std::invalid_argument& e) {
    throw ParseError(path + "/target", e.what());
  }
  spec.k = require_int(j, path, "k");
  const Json& deg = require_field(j, path, "deg");
  if (!deg.is_array()) throw ParseError(path + "/deg", "expected an array");
  std::vector<int> entries;
  for (std::size_t i = 0; i < deg.size(); ++i) {
    if (!deg[i].is_number_integer()) throw ParseError(path + "/deg/" + std::to_string(i), "expected an integer");
    entries.push_back(deg[i].get<int>());
  }
  try {
    spec.degrees = DegreeVector(std::move(entries));
  } catch (const std::invalid_argument& e) {
    throw ParseError(path + "/deg", e.what());
  }
  return spec;
}

std::string to_string(const CoverSpec& spec) { return to_json(spec).dump(); }

}  // namespace realcover
