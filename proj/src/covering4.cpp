#include "realcover/covering4.hpp"

#include <algorithm>

namespace realcover {

namespace {

// Arc layout for the hyperelliptic M-curve pair: n arcs on a cycle, arc p
// spans [(p - 3/5) / n, (p + 3/5) / n]. Neighbours overlap in a strip of
// width 1/(5n); the middle 4/(5n) of each arc is covered by it alone.
Rational arc_lo(long p, long n) { return Rational(5 * p - 3, 5 * n); }
Rational arc_hi(long p, long n) { return Rational(5 * p + 3, 5 * n); }

PLMap tent(const Rational& lo, const Rational& hi) { return PLMap::from_lifts({lo, hi}, 0); }

std::string y1(int j) { return "Y1." + std::to_string(j); }
std::string y2(int j) { return "Y2." + std::to_string(j); }

struct Glued {
  PLCover cover;
  int g = 0;
  int a = 0;
  std::vector<std::string> cycle;  // components of the minimal cover, in circle order
  long positions = 0;              // arcs in the underlying pair layout
};

// Smallest lift > x_i on an ascending segment that is = v mod 1, if inside it.
std::optional<Rational> ascending_lift(const PLMap::Segment& s, const Rational& v) {
  if (!s.ascending()) return std::nullopt;
  const Rational lift = v + Rational(floor(s.x0 - v)) + 1;
  if (lift < s.x1) return lift;
  return std::nullopt;
}

struct Pass {
  std::size_t segment;
  Rational lift;
};

std::optional<Pass> first_ascending_pass(const PLMap& m, const Rational& v) {
  for (std::size_t i = 0; i < m.segment_count(); ++i)
    if (auto lift = ascending_lift(m.segment(i), v)) return Pass{i, *lift};
  return std::nullopt;
}

Glued m_curve_full(int g) {
  const int half = g / 2;
  const long n = 2L * half + 2;
  Glued out;
  out.positions = n;
  out.cover.k = 4;
  out.cover.target = CoverTarget::ProjLine;
  for (int j = 0; j <= half; ++j) out.cover.components.push_back({y1(j), tent(arc_lo(2 * j, n), arc_hi(2 * j, n))});
  for (int j = 0; j <= half; ++j)
    out.cover.components.push_back({y2(j), tent(arc_lo(2 * j + 1, n), arc_hi(2 * j + 1, n))});

  if (g % 2 == 0) {
    // both curves have genus g/2; join Y1.0 and Y2.0 where their arcs meet
    out.cover = smooth_merge(out.cover, y1(0), y2(0));
    out.g = 2 * half;
    out.cycle.push_back(y1(0));
    for (int p = 2; p < n; ++p) out.cycle.push_back(p % 2 == 0 ? y1(p / 2) : y2(p / 2));
  } else {
    // Y2 has one more oval, nested in the part of Y1.0's arc nobody else covers
    out.cover.components.push_back({y2(half + 1), tent(Rational(-1, 5 * n), Rational(1, 5 * n))});
    out.cover = smooth_merge(out.cover, y1(0), y2(half + 1));
    out.g = half + (half + 1);
    for (int p = 0; p < n; ++p) out.cycle.push_back(p % 2 == 0 ? y1(p / 2) : y2(p / 2));
  }
  out.a = 0;
  return out;
}

Glued m_curve(int g, int kcov) {
  if (kcov == g + 1) return m_curve_full(g);
  Glued out = m_curve_full(kcov - 1);
  // Split the last cycle component at `splits` real nodes inside its overlap
  // with the first arc; the pieces above each node become extra ovals whose
  // images are already covered.
  const int splits = g - kcov + 1;
  const long n = out.positions;
  const Rational lo = arc_lo(0, n) + 1;
  const Rational width(1, 5 * n);
  const Rational step = width / (splits + 1);
  const std::string target = out.cycle.back();
  for (int i = splits; i >= 1; --i)
    out.cover = smooth_split(out.cover, target, lo + step * i, step / 4, "S" + std::to_string(i));
  out.g += splits;
  return out;
}

Glued orientable(int g, int s, int kcov) {
  if (s == g + 1) return m_curve(g, kcov);
  const int extra = (g + 1 - s) / 2;
  Glued out = m_curve(g - extra, kcov + extra);
  // join the first extra + 1 cycle components into one
  for (int j = 1; j <= extra; ++j) out.cover = smooth_merge(out.cover, out.cycle[0], out.cycle[j]);
  out.cycle.erase(out.cycle.begin() + 1, out.cycle.begin() + 1 + extra);
  out.g += extra;
  return out;
}

Glued build(int g, int s, int a, int kcov) {
  if (a == 0) return orientable(g, s, kcov);
  Glued out = (s - g) % 2 == 0 ? orientable(g - 1, s, kcov) : build(g - 1, s, 1, kcov);
  // identify a conjugate pair over a real value and smooth without real points
  bool has_pair = false;
  for (const auto& x : sample_values(out.cover)) {
    if (fiber_size(out.cover, x) < out.cover.k) {
      has_pair = true;
      break;
    }
  }
  if (!has_pair) throw std::logic_error("degree-4 covering has no non-real pair over a real value");
  out.g += 1;
  out.a = 1;
  return out;
}

}  // namespace

int covering_number(const PLCover& c) {
  if (c.target == CoverTarget::AnisotropicConic || c.components.empty()) return 0;
  std::vector<Arc> arcs;
  for (const auto& la : image_arcs(c)) arcs.push_back(la.arc);
  return min_circle_cover(arcs).value_or(0);
}

PLCover smooth_merge(const PLCover& c, const std::string& first, const std::string& second, const Rational& value,
                     const Rational& eps) {
  if (first == second) throw std::invalid_argument("merge needs two distinct components");
  const LabeledMap* a = c.find(first);
  const LabeledMap* b = c.find(second);
  if (!a || !b) throw std::invalid_argument("merge names an unknown component");
  const Rational v = frac(value);
  const auto pa = first_ascending_pass(a->map, v);
  const auto pb = first_ascending_pass(b->map, v);
  if (!pa || !pb) throw std::invalid_argument("merge site is not on an ascending pass of both components");

  const auto xs = a->map.lifts();
  auto ys = b->map.lifts();
  const Rational shift = pa->lift - pb->lift;
  for (auto& y : ys) y += shift;
  const std::size_t i = pa->segment;
  const std::size_t j = pb->segment;
  const auto sa = a->map.segment(i);
  const auto sb = b->map.segment(j);
  const Rational& L = pa->lift;
  if (eps <= 0 || eps >= L - sa.x0 || eps >= sa.x1 - L || eps >= L - (sb.x0 + shift) || eps >= (sb.x1 + shift) - L)
    throw std::invalid_argument("merge fold width too large for the site");

  // Follow the first component up to the node, fold back along the second
  // one traversed backwards, fold again and finish the first component.
  const long wb = b->map.winding();
  const long m = static_cast<long>(ys.size());
  std::vector<Rational> lifts(xs.begin(), xs.begin() + static_cast<long>(i) + 1);
  lifts.push_back(L - eps);
  for (long r = 0; r < m; ++r) {
    long idx = static_cast<long>(j) - r;
    lifts.push_back(idx >= 0 ? ys[idx] : ys[idx + m] - wb);
  }
  lifts.push_back(L + eps - wb);
  for (std::size_t t = i + 1; t < xs.size(); ++t) lifts.push_back(xs[t] - wb);

  PLCover out = c;
  out.find(first)->map = PLMap::from_lifts(std::move(lifts), a->map.winding() - wb);
  out.components.erase(std::find_if(out.components.begin(), out.components.end(),
                                    [&](const LabeledMap& lm) { return lm.label == second; }));
  return out;
}

PLCover smooth_merge(const PLCover& c, const std::string& first, const std::string& second) {
  const LabeledMap* a = c.find(first);
  const LabeledMap* b = c.find(second);
  if (!a || !b) throw std::invalid_argument("merge names an unknown component");
  const auto crit = critical_values(c);
  std::optional<Rational> best_mid;
  Rational best_len;
  for (std::size_t i = 0; i < crit.size(); ++i) {
    const Rational lo = crit[i];
    const Rational hi = i + 1 < crit.size() ? crit[i + 1] : crit.front() + 1;
    const Rational mid = frac((lo + hi) / 2);
    if (!first_ascending_pass(a->map, mid) || !first_ascending_pass(b->map, mid)) continue;
    if (!best_mid || hi - lo > best_len) {
      best_mid = mid;
      best_len = hi - lo;
    }
  }
  if (!best_mid) throw std::invalid_argument("components " + first + " and " + second + " share no ascending value");
  return smooth_merge(c, first, second, *best_mid, best_len / 4);
}

PLCover smooth_split(const PLCover& c, const std::string& label, const Rational& value, const Rational& eps,
                     const std::string& new_label) {
  const LabeledMap* comp = c.find(label);
  if (!comp) throw std::invalid_argument("split names an unknown component");
  if (comp->map.winding() != 0) throw std::invalid_argument("split needs a winding-0 component");
  if (c.find(new_label)) throw std::invalid_argument("split label already in use");
  const Rational v = frac(value);
  const auto crit = critical_values(c);
  if (std::binary_search(crit.begin(), crit.end(), v)) throw SingularValue("split value is a breakpoint image");

  const Rational top = comp->map.max_lift();
  Rational level = v + Rational(floor(top - v));
  if (level == top) level -= 1;
  if (level <= comp->map.min_lift()) throw std::invalid_argument("split value not in the image");

  const auto xs = comp->map.lifts();
  const std::size_t n = xs.size();
  auto crosses_up = [&](std::size_t i) { return xs[i] < level && level < xs[(i + 1) % n]; };
  auto crosses_down = [&](std::size_t i) { return xs[i] > level && level > xs[(i + 1) % n]; };
  std::size_t up = n;
  for (std::size_t i = 0; i < n && up == n; ++i)
    if (crosses_up(i)) up = i;
  if (up == n) throw std::invalid_argument("no ascending pass at the split level");
  std::size_t down = (up + 1) % n;
  while (!crosses_down(down)) down = (down + 1) % n;

  const Rational gap = std::min({level - xs[up], xs[(up + 1) % n] - level, xs[down] - level, level - xs[(down + 1) % n]});
  if (eps <= 0 || eps >= gap) throw std::invalid_argument("split fold width too large for the site");

  std::vector<Rational> upper{level + eps};
  for (std::size_t i = (up + 1) % n;; i = (i + 1) % n) {
    upper.push_back(xs[i]);
    if (i == down) break;
  }
  std::vector<Rational> lower;
  for (std::size_t i = (down + 1) % n;; i = (i + 1) % n) {
    lower.push_back(xs[i]);
    if (i == up) break;
  }
  lower.push_back(level - eps);

  PLCover out = c;
  out.find(label)->map = PLMap::from_lifts(std::move(lower), 0);
  out.components.push_back({new_label, PLMap::from_lifts(std::move(upper), 0)});
  return out;
}

std::vector<LabeledArc> m_curve_pair_layout(int half_genus) {
  const long n = 2L * half_genus + 2;
  std::vector<LabeledArc> out;
  for (int j = 0; j <= half_genus; ++j) out.push_back({y1(j), Arc::between(arc_lo(2 * j, n), arc_hi(2 * j, n))});
  for (int j = 0; j <= half_genus; ++j)
    out.push_back({y2(j), Arc::between(arc_lo(2 * j + 1, n), arc_hi(2 * j + 1, n))});
  return out;
}

CovnumBuild build_covnum(const CoveringNumberTarget& target) {
  const TopType& t = target.top;
  if (!weichold_admissible(t)) throw InfeasibleTarget("type is not Weichold-admissible");
  if (t.s < 1) throw InfeasibleTarget("covering number needs real points (s >= 1)");
  if (target.kcov < 1 || target.kcov > t.s) throw InfeasibleTarget("covering number must lie in [1, s]");

  Glued glued = build(t.g, t.s, t.a, target.kcov);

  CovnumBuild out;
  out.spec = CoverSpec{{glued.g, static_cast<int>(glued.cover.components.size()), glued.a},
                       CoverTarget::ProjLine,
                       glued.cover.k,
                       DegreeVector::zeros(static_cast<int>(glued.cover.components.size()))};
  if (!(out.spec.top == t)) throw std::logic_error("gluing produced type " + to_string(out.spec));
  for (const auto& comp : glued.cover.components)
    if (comp.map.winding() != 0) throw std::logic_error("gluing produced a component of non-zero degree");
  if (const auto check = check_fibers(glued.cover); !check.ok) throw std::logic_error(check.problem);
  if (covering_number(glued.cover) != target.kcov) throw std::logic_error("gluing missed the covering number");
  out.cover = std::move(glued.cover);
  out.cycle = std::move(glued.cycle);
  return out;
}

Json to_json(const CovnumBuild& build) {
  Json j;
  j["spec"] = to_json(build.spec);
  j["cover"] = to_json(build.cover);
  j["covering_number"] = covering_number(build.cover);
  return j;
}

}  // namespace realcover
