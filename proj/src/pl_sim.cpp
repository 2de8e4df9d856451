#include "realcover/pl_sim.hpp"

#include <algorithm>
#include <iomanip>
#include <set>
#include <sstream>

#include "realcover/json_util.hpp"

namespace realcover {

namespace {

Rational ceil_minus_one(const Rational& q) {
  // largest integer strictly below q
  BigInt f = floor(q);
  return Rational(Rational(f) == q ? f - 1 : f);
}

}  // namespace

PLMap::PLMap(std::vector<Breakpoint> breakpoints, long winding)
    : breakpoints_(std::move(breakpoints)), winding_(winding) {
  if (breakpoints_.size() < 2) throw std::invalid_argument("PL map needs at least 2 breakpoints");
  for (std::size_t i = 0; i < breakpoints_.size(); ++i) {
    const auto& b = breakpoints_[i];
    if (b.t < 0 || b.t >= 1) throw std::invalid_argument("breakpoint parameter outside [0, 1)");
    if (i > 0 && b.t <= breakpoints_[i - 1].t) throw std::invalid_argument("breakpoint parameters not increasing");
  }
  for (std::size_t i = 0; i < segment_count(); ++i) {
    const Segment s = segment(i);
    if (s.x0 == s.x1) throw std::invalid_argument("PL map has a segment of zero slope");
  }
}

PLMap PLMap::from_lifts(std::vector<Rational> lifts, long winding) {
  std::vector<Breakpoint> pts;
  const std::size_t n = lifts.size();
  pts.reserve(n);
  for (std::size_t i = 0; i < n; ++i)
    pts.push_back({Rational(static_cast<long>(i), static_cast<long>(n)), std::move(lifts[i])});
  return PLMap(std::move(pts), winding);
}

std::vector<Rational> PLMap::lifts() const {
  std::vector<Rational> out;
  out.reserve(breakpoints_.size());
  for (const auto& b : breakpoints_) out.push_back(b.x);
  return out;
}

PLMap::Segment PLMap::segment(std::size_t i) const {
  const auto& a = breakpoints_[i];
  if (i + 1 < breakpoints_.size()) {
    const auto& b = breakpoints_[i + 1];
    return {a.t, a.x, b.t, b.x};
  }
  return {a.t, a.x, Rational(1), breakpoints_.front().x + winding_};
}

PLMap PLMap::reversed() const {
  // x'(t) = x(1 - t): vertices x_n, x_{n-1}, ..., x_1 with x_n = x_0 + w
  std::vector<Rational> xs = lifts();
  std::vector<Rational> out;
  out.reserve(xs.size());
  out.push_back(xs.front() + winding_);
  for (std::size_t i = xs.size() - 1; i >= 1; --i) out.push_back(xs[i]);
  return from_lifts(std::move(out), -winding_);
}

Rational PLMap::min_lift() const {
  Rational m = breakpoints_.front().x;
  for (const auto& b : breakpoints_) m = std::min(m, b.x);
  return m;
}

Rational PLMap::max_lift() const {
  Rational m = breakpoints_.front().x;
  for (const auto& b : breakpoints_) m = std::max(m, b.x);
  return m;
}

long winding(const PLMap& m) { return m.winding(); }

const LabeledMap* PLCover::find(const std::string& label) const {
  auto it = std::find_if(components.begin(), components.end(), [&](const LabeledMap& c) { return c.label == label; });
  return it == components.end() ? nullptr : &*it;
}

LabeledMap* PLCover::find(const std::string& label) {
  auto it = std::find_if(components.begin(), components.end(), [&](const LabeledMap& c) { return c.label == label; });
  return it == components.end() ? nullptr : &*it;
}

std::vector<Rational> critical_values(const PLCover& c) {
  std::set<Rational> values;
  for (const auto& comp : c.components)
    for (const auto& b : comp.map.breakpoints()) values.insert(frac(b.x));
  return {values.begin(), values.end()};
}

namespace {

bool is_critical(const std::vector<Rational>& crit, const Rational& x) {
  return std::binary_search(crit.begin(), crit.end(), x);
}

// Visits every t in the segment with lift = x + m, m an integer, x regular.
template <typename Visit>
void segment_solutions(const PLMap::Segment& s, const Rational& x, Visit&& visit) {
  const Rational& lo = s.x0 < s.x1 ? s.x0 : s.x1;
  const Rational& hi = s.x0 < s.x1 ? s.x1 : s.x0;
  // lo < x + m < hi
  const Rational m_first = Rational(floor(lo - x)) + 1;
  const Rational m_last = ceil_minus_one(hi - x);
  for (Rational m = m_first; m <= m_last; m += 1) {
    const Rational lift = x + m;
    visit(s.t0 + (lift - s.x0) / (s.x1 - s.x0) * (s.t1 - s.t0));
  }
}

int segment_count_at(const PLMap::Segment& s, const Rational& x) {
  const Rational& lo = s.x0 < s.x1 ? s.x0 : s.x1;
  const Rational& hi = s.x0 < s.x1 ? s.x1 : s.x0;
  const Rational m_first = Rational(floor(lo - x)) + 1;
  const Rational m_last = ceil_minus_one(hi - x);
  if (m_last < m_first) return 0;
  return static_cast<int>(m_last - m_first) + 1;
}

int fiber_size_unchecked(const PLCover& c, const Rational& x) {
  int total = 0;
  for (const auto& comp : c.components)
    for (std::size_t i = 0; i < comp.map.segment_count(); ++i) total += segment_count_at(comp.map.segment(i), x);
  return total;
}

}  // namespace

std::vector<FiberPoint> fiber(const PLCover& c, const Rational& x) {
  const Rational v = frac(x);
  if (is_critical(critical_values(c), v)) throw SingularValue("value " + to_string(v) + " is a breakpoint image");
  std::vector<FiberPoint> out;
  for (const auto& comp : c.components)
    for (std::size_t i = 0; i < comp.map.segment_count(); ++i)
      segment_solutions(comp.map.segment(i), v, [&](Rational t) { out.push_back({comp.label, std::move(t)}); });
  return out;
}

int fiber_size(const PLCover& c, const Rational& x) {
  const Rational v = frac(x);
  if (is_critical(critical_values(c), v)) throw SingularValue("value " + to_string(v) + " is a breakpoint image");
  return fiber_size_unchecked(c, v);
}

namespace {

struct Interval {
  Rational lo;  // lo < hi, lo in [0, 1); hi may exceed 1 for the wrap interval
  Rational hi;
  Rational length() const { return hi - lo; }
  Rational mid() const { return (lo + hi) / 2; }
};

std::vector<Interval> regular_intervals(const std::vector<Rational>& crit) {
  if (crit.empty()) return {{Rational(0), Rational(1)}};
  std::vector<Interval> out;
  for (std::size_t i = 0; i + 1 < crit.size(); ++i) out.push_back({crit[i], crit[i + 1]});
  out.push_back({crit.back(), crit.front() + 1});
  return out;
}

}  // namespace

std::vector<Rational> sample_values(const PLCover& c) {
  const auto crit = critical_values(c);
  std::set<Rational> out;
  for (const auto& iv : regular_intervals(crit)) out.insert(frac(iv.mid()));
  for (int j = 0; j < 100; ++j) {
    Rational x(2 * j + 1, 200);
    if (is_critical(crit, x)) {
      auto next = std::upper_bound(crit.begin(), crit.end(), x);
      const Rational upper = next == crit.end() ? crit.front() + 1 : *next;
      x = frac((x + upper) / 2);
    }
    out.insert(x);
  }
  return {out.begin(), out.end()};
}

FiberCheck check_fibers(const PLCover& c) {
  FiberCheck out;
  if (c.target == CoverTarget::AnisotropicConic) {
    if (!c.components.empty()) {
      out.ok = false;
      out.problem = "covering of R0 has real components";
    }
    return out;
  }
  for (const auto& x : sample_values(c)) {
    ++out.samples;
    const int n = fiber_size_unchecked(c, x);
    if (n > c.k || (c.k - n) % 2 != 0) {
      out.ok = false;
      out.problem = "fiber over " + to_string(x) + " has " + std::to_string(n) + " real points, k = " +
                    std::to_string(c.k);
      return out;
    }
  }
  return out;
}

Arc Arc::between(const Rational& start, const Rational& end) {
  Arc arc;
  arc.full_ = false;
  arc.start_ = frac(start);
  arc.end_ = frac(end);
  if (arc.start_ == arc.end_) throw std::invalid_argument("arc endpoints coincide");
  return arc;
}

Rational Arc::length() const {
  if (full_) return Rational(1);
  return end_ > start_ ? end_ - start_ : end_ - start_ + 1;
}

bool Arc::contains(const Rational& x) const {
  if (full_) return true;
  return frac(x - start_) <= length();
}

std::string to_string(const Arc& arc) {
  if (arc.is_full()) return "full";
  return "[" + to_string(arc.start()) + ", " + to_string(arc.end()) + "]";
}

std::vector<LabeledArc> image_arcs(const PLCover& c) {
  std::vector<LabeledArc> out;
  for (const auto& comp : c.components) {
    const Rational lo = comp.map.min_lift();
    const Rational hi = comp.map.max_lift();
    if (comp.map.winding() != 0 || hi - lo >= 1)
      out.push_back({comp.label, Arc::full_circle()});
    else
      out.push_back({comp.label, Arc::between(lo, hi)});
  }
  return out;
}

std::optional<int> min_circle_cover(std::span<const Arc> arcs) {
  for (const auto& a : arcs)
    if (a.is_full()) return 1;
  const int n = static_cast<int>(arcs.size());
  std::optional<int> best;
  for (const auto& first : arcs) {
    const Rational goal = first.start() + 1;
    Rational reach = first.start() + first.length();
    int used = 1;
    bool stuck = false;
    while (reach < goal && used <= n) {
      Rational furthest = reach;
      for (const auto& b : arcs) {
        // shift b so that it starts at or before reach, as late as possible
        const Rational shifted = b.start() + Rational(floor(reach - b.start()));
        furthest = std::max(furthest, shifted + b.length());
      }
      if (furthest == reach) {
        stuck = true;
        break;
      }
      reach = furthest;
      ++used;
    }
    if (stuck || reach < goal) continue;
    if (!best || used < *best) best = used;
  }
  return best;
}

namespace {

struct Splice {
  std::size_t segment;
  Rational lift;
  Rational eps;
};

// Canonical or requested point on an ascending segment of `map`, away from
// all critical values of the cover.
Splice choose_ascending_site(const PLMap& map, const std::vector<Rational>& crit, const std::optional<Rational>& value) {
  std::optional<Splice> best;
  Rational best_len = -1;
  for (std::size_t i = 0; i < map.segment_count(); ++i) {
    const auto s = map.segment(i);
    if (!s.ascending()) continue;
    // cut points: critical lifts strictly inside (x0, x1), plus the ends
    std::vector<Rational> cuts{s.x0, s.x1};
    for (const auto& cv : crit) {
      for (Rational m = Rational(floor(s.x0 - cv)) + 1; cv + m < s.x1; m += 1) cuts.push_back(cv + m);
    }
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
    for (std::size_t j = 0; j + 1 < cuts.size(); ++j) {
      const Rational& lo = cuts[j];
      const Rational& hi = cuts[j + 1];
      if (value) {
        const Rational target = *value + Rational(floor(lo - *value)) + 1;  // smallest lift > lo
        if (target < hi) {
          const Rational gap = std::min(target - lo, hi - target);
          return {i, target, gap / 2};
        }
        continue;
      }
      if (hi - lo > best_len) {
        best_len = hi - lo;
        best = Splice{i, (lo + hi) / 2, (hi - lo) / 4};
      }
    }
  }
  if (!best) throw PreconditionViolated(StepKind::I, value ? "site is not on an ascending regular part of the component"
                                                           : "component has no ascending segment");
  return *best;
}

PLMap splice_wrap(const PLMap& map, const Splice& site, bool with_ram) {
  const auto xs = map.lifts();
  std::vector<Rational> out;
  out.reserve(xs.size() + 2);
  const long shift = with_ram ? -1 : 1;
  for (std::size_t i = 0; i <= site.segment; ++i) out.push_back(xs[i]);
  if (with_ram) {
    // fold, run the attached line backwards once, fold again
    out.push_back(site.lift - site.eps);
    out.push_back(site.lift + site.eps - 1);
  } else {
    out.push_back(site.lift);
    out.push_back(site.lift + 1);
  }
  for (std::size_t i = site.segment + 1; i < xs.size(); ++i) out.push_back(xs[i] + shift);
  return PLMap::from_lifts(std::move(out), map.winding() + shift);
}

std::string next_label(const PLCover& c, const SurgerySite& site) {
  if (!site.new_label.empty()) return site.new_label;
  return "N" + std::to_string(c.components.size() + 1);
}

void require_budget(const PLCover& c, StepKind kind) {
  const auto check = check_fibers(c);
  if (!check.ok) throw BudgetExceeded("construction " + to_string(kind) + ": " + check.problem);
}

}  // namespace

PLCover surgery(const PLCover& c, const ConstructionStep& step, const SurgerySite& site) {
  try {
    validate_step(step);
  } catch (const std::invalid_argument& e) {
    throw PreconditionViolated(step.kind, e.what());
  }
  const bool on_line = c.target == CoverTarget::ProjLine;
  if (step.kind != StepKind::V && !on_line) throw PreconditionViolated(step.kind, "target must be P1");
  PLCover out = c;
  switch (step.kind) {
    case StepKind::I: {
      LabeledMap* comp = out.find(*step.placement);
      if (!comp) throw PreconditionViolated(step.kind, "placement names no existing component");
      const Splice where = choose_ascending_site(comp->map, critical_values(c), site.value);
      PLMap spliced = splice_wrap(comp->map, where, step.variant == Variant::WithRealRam);
      if (spliced.winding() < 0) spliced = spliced.reversed();
      comp->map = std::move(spliced);
      out.k += 1;
      break;
    }
    case StepKind::II: {
      if (step.variant == Variant::WithoutRealRam) break;  // happens off the real locus
      const auto crit = critical_values(c);
      std::optional<Interval> chosen;
      for (const auto& iv : regular_intervals(crit)) {
        const bool has_room = fiber_size_unchecked(c, frac(iv.mid())) <= c.k - 2;
        if (site.value) {
          const Rational v = frac(*site.value);
          const Rational lift = v < iv.lo ? v + 1 : v;
          if (lift > iv.lo && lift < iv.hi) {
            if (!has_room) break;
            const Rational half = std::min(lift - iv.lo, iv.hi - lift) / 2;
            chosen = Interval{lift - half, lift + half};
            break;
          }
          continue;
        }
        if (has_room && (!chosen || iv.length() > chosen->length())) chosen = iv;
      }
      if (!chosen) throw PreconditionViolated(step.kind, "no regular value with a non-real pair in its fiber");
      const Rational third = chosen->length() / 3;
      std::vector<Rational> fold{chosen->lo + third, chosen->lo + 2 * third};
      out.components.push_back({next_label(c, site), PLMap::from_lifts(std::move(fold), 0)});
      break;
    }
    case StepKind::III:
      out.components.push_back({next_label(c, site), PLMap::from_lifts({Rational(0), Rational(1, 2)}, 1)});
      out.k += 1;
      break;
    case StepKind::IV:
      if (!c.components.empty()) throw PreconditionViolated(step.kind, "curve must have no real points");
      out.k += 2;
      break;
    case StepKind::V:
      if (c.target != CoverTarget::AnisotropicConic) throw PreconditionViolated(step.kind, "target must be R0");
      out.k += 1;
      break;
  }
  require_budget(out, step.kind);
  return out;
}

namespace {

struct SeedRealizer {
  PLCover operator()(const HyperellipticSeed& seed) const {
    seed_state(seed);  // catalog check
    PLCover c;
    c.k = 2;
    c.target = CoverTarget::ProjLine;
    const auto& d = seed.degrees.entries();
    if (d == std::vector<int>{2}) {
      c.components.push_back({"C1", PLMap::from_lifts({Rational(0), Rational(1)}, 2)});
    } else if (d == std::vector<int>{1, 1}) {
      c.components.push_back({"C1", PLMap::from_lifts({Rational(0), Rational(1, 2)}, 1)});
      c.components.push_back({"C2", PLMap::from_lifts({Rational(0), Rational(1, 2)}, 1)});
    } else {
      // all zeros: disjoint folds over the middle halves of s equal slots
      const long s = seed.top.s;
      for (long i = 0; i < s; ++i) {
        std::vector<Rational> lifts{Rational(4 * i + 1, 4 * s), Rational(4 * i + 3, 4 * s)};
        c.components.push_back({"C" + std::to_string(i + 1), PLMap::from_lifts(std::move(lifts), 0)});
      }
    }
    return c;
  }
  PLCover operator()(const HyperellipticR0Seed& seed) const {
    seed_state(seed);
    return {{}, 2, CoverTarget::AnisotropicConic};
  }
  PLCover operator()(const GenericPencilSeed& seed) const {
    seed_state(seed);
    return {{}, seed.k, CoverTarget::ProjLine};
  }
  PLCover operator()(const GenericR0PencilSeed& seed) const {
    seed_state(seed);
    return {{}, seed.k, CoverTarget::AnisotropicConic};
  }
};

}  // namespace

PLCover realize_seed(const BaseSeed& seed) { return std::visit(SeedRealizer{}, seed); }

PLCover realize(const Plan& plan) {
  LabeledState state = seed_state(plan.seed);
  PLCover cover = realize_seed(plan.seed);
  for (std::size_t i = 0; i < plan.steps.size(); ++i) {
    const auto& step = plan.steps[i];
    LabeledState next;
    try {
      next = apply_step(state, step);
    } catch (const PreconditionViolated& e) {
      throw PreconditionViolated(e.kind(), e.reason(), i);
    }
    SurgerySite site;
    if (next.s() > state.s()) site.new_label = next.components.back().label;
    try {
      cover = surgery(cover, step, site);
    } catch (const PreconditionViolated& e) {
      throw PreconditionViolated(e.kind(), e.reason(), i);
    }
    state = std::move(next);
  }
  return cover;
}

Json to_json(const PLCover& c) {
  Json j;
  j["target"] = to_string(c.target);
  j["k"] = c.k;
  j["components"] = Json::array();
  for (const auto& comp : c.components) {
    Json cj;
    cj["label"] = comp.label;
    cj["winding"] = comp.map.winding();
    cj["breakpoints"] = Json::array();
    for (const auto& b : comp.map.breakpoints()) cj["breakpoints"].push_back(Json::array({to_string(b.t), to_string(b.x)}));
    j["components"].push_back(std::move(cj));
  }
  return j;
}

PLCover pl_cover_from_json(const Json& j) {
  PLCover c;
  try {
    c.target = target_from_string(detail::require_string(j, "", "target"));
  } catch (const std::invalid_argument& e) {
    throw ParseError("/target", e.what());
  }
  c.k = detail::require_int(j, "", "k");
  const Json& comps = detail::require_field(j, "", "components");
  if (!comps.is_array()) throw ParseError("/components", "expected an array");
  for (std::size_t i = 0; i < comps.size(); ++i) {
    const std::string path = "/components/" + std::to_string(i);
    const std::string label = detail::require_string(comps[i], path, "label");
    const long w = detail::require_int(comps[i], path, "winding");
    const Json& bps = detail::require_field(comps[i], path, "breakpoints");
    if (!bps.is_array()) throw ParseError(path + "/breakpoints", "expected an array");
    std::vector<PLMap::Breakpoint> pts;
    for (std::size_t b = 0; b < bps.size(); ++b) {
      const std::string bpath = path + "/breakpoints/" + std::to_string(b);
      if (!bps[b].is_array() || bps[b].size() != 2 || !bps[b][0].is_string() || !bps[b][1].is_string())
        throw ParseError(bpath, "expected [\"t\", \"x\"] rational strings");
      try {
        pts.push_back({rational_from_string(bps[b][0].get<std::string>()), rational_from_string(bps[b][1].get<std::string>())});
      } catch (const std::invalid_argument& e) {
        throw ParseError(bpath, e.what());
      }
    }
    try {
      c.components.push_back({label, PLMap(std::move(pts), w)});
    } catch (const std::invalid_argument& e) {
      throw ParseError(path, e.what());
    }
  }
  return c;
}

std::string fiber_csv(const PLCover& c) {
  std::ostringstream out;
  out << "x,fiber_count\n" << std::setprecision(12);
  for (const auto& x : sample_values(c)) out << x.convert_to<double>() << "," << fiber_size_unchecked(c, x) << "\n";
  return out.str();
}

}  // namespace realcover
