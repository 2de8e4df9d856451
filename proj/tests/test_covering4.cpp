#include "doctest.h"
#include "oracles.hpp"
#include "realcover/covering4.hpp"
#include "realcover/planner.hpp"

using namespace realcover;

namespace {

Rational q(long p, long d = 1) { return Rational(p, d); }

std::vector<Arc> arcs_of(const PLCover& c) {
  std::vector<Arc> out;
  for (const auto& la : image_arcs(c)) out.push_back(la.arc);
  return out;
}

bool meet(const Arc& x, const Arc& y) {
  return x.contains(y.start()) || y.contains(x.start());
}

void check_build(const CovnumBuild& b, const TopType& top, int kcov) {
  CHECK(b.spec.top == top);
  CHECK(b.cover.k == 4);
  CHECK(static_cast<int>(b.cover.components.size()) == top.s);
  for (const auto& comp : b.cover.components) CHECK(winding(comp.map) == 0);
  CHECK(covering_number(b.cover) == kcov);
  const auto arcs = arcs_of(b.cover);
  CHECK(oracle::min_cover(arcs) == std::optional<int>(kcov));
  const FiberCheck fc = check_fibers(b.cover);
  CHECK_MESSAGE(fc.ok, fc.problem);
  CHECK(static_cast<int>(b.cycle.size()) == kcov);
  std::vector<Arc> cycle_arcs;
  for (const auto& label : b.cycle) {
    const LabeledMap* m = b.cover.find(label);
    REQUIRE(m != nullptr);
    cycle_arcs.push_back(image_arcs(PLCover{{*m}, 4, CoverTarget::ProjLine})[0].arc);
  }
  CHECK(oracle::min_cover(cycle_arcs) == std::optional<int>(kcov));
}

}  // namespace

TEST_CASE("covering number basics") {
  CHECK(covering_number(PLCover{{}, 4, CoverTarget::ProjLine}) == 0);
  PLCover one{{{"A", PLMap::from_lifts({q(0), q(1, 2)}, 1)}, {"B", PLMap::from_lifts({q(0), q(1, 4)}, 0)}}, 3,
              CoverTarget::ProjLine};
  CHECK(covering_number(one) == 1);
  PLCover gap{{{"A", PLMap::from_lifts({q(0), q(1, 2)}, 0)}, {"B", PLMap::from_lifts({q(2, 5), q(9, 10)}, 0)}}, 4,
              CoverTarget::ProjLine};
  CHECK(covering_number(gap) == 0);
}

TEST_CASE("odd degree covers have covering number 1") {
  for (const auto& spec : enumerate_admissible(4, 5)) {
    if (spec.target != CoverTarget::ProjLine || spec.k % 2 == 0 || spec.k < 3) continue;
    const PlanResult r = plan(spec);
    REQUIRE(std::holds_alternative<Plan>(r));
    const PLCover c = realize(std::get<Plan>(r));
    if (c.components.empty()) continue;
    CHECK_MESSAGE(covering_number(c) == 1, to_string(spec));
  }
}

TEST_CASE("pair layout incidence") {
  for (int half = 1; half <= 4; ++half) {
    const auto arcs = m_curve_pair_layout(half);
    REQUIRE(static_cast<int>(arcs.size()) == 2 * (half + 1));
    for (int j = 0; j <= half; ++j)
      for (int jp = 0; jp <= half; ++jp) {
        const bool expected = jp == j || jp == j - 1 || (j == 0 && jp == half);
        CHECK_MESSAGE(meet(arcs[j].arc, arcs[half + 1 + jp].arc) == expected, half, j, jp);
      }
    // arcs of the same curve are disjoint
    for (int j = 0; j <= half; ++j)
      for (int jp = j + 1; jp <= half; ++jp) {
        CHECK_FALSE(meet(arcs[j].arc, arcs[jp].arc));
        CHECK_FALSE(meet(arcs[half + 1 + j].arc, arcs[half + 1 + jp].arc));
      }
  }
}

TEST_CASE("smallest even-genus M-curve build") {
  const CovnumBuild b = build_covnum({{2, 3, 0}, 3});
  check_build(b, {2, 3, 0}, 3);
  const auto arcs = arcs_of(b.cover);
  for (std::size_t i = 0; i < arcs.size(); ++i)
    for (std::size_t j = i + 1; j < arcs.size(); ++j) CHECK(meet(arcs[i], arcs[j]));
}

TEST_CASE("M-curve with smaller covering number uses splits") {
  const CovnumBuild b = build_covnum({{6, 7, 0}, 4});
  check_build(b, {6, 7, 0}, 4);
  int split_pieces = 0;
  for (const auto& comp : b.cover.components) split_pieces += comp.label[0] == 'S';
  CHECK(split_pieces == 3);
}

TEST_CASE("every small target builds") {
  for (int g = 0; g <= 5; ++g)
    for (int s = 1; s <= g + 1; ++s)
      for (int a = 0; a <= 1; ++a) {
        if (!weichold_admissible(g, s, a)) continue;
        for (int kcov = 1; kcov <= s; ++kcov) {
          CAPTURE(g);
          CAPTURE(s);
          CAPTURE(a);
          CAPTURE(kcov);
          check_build(build_covnum({{g, s, a}, kcov}), {g, s, a}, kcov);
        }
      }
}

TEST_CASE("maximal covering number is tight") {
  for (const TopType top : {TopType{3, 4, 0}, TopType{4, 3, 0}, TopType{5, 2, 1}, TopType{4, 5, 0}}) {
    const CovnumBuild b = build_covnum({top, top.s});
    const auto arcs = arcs_of(b.cover);
    for (std::size_t drop = 0; drop < arcs.size(); ++drop) {
      std::vector<Arc> rest;
      for (std::size_t i = 0; i < arcs.size(); ++i)
        if (i != drop) rest.push_back(arcs[i]);
      CHECK_FALSE(oracle::min_cover(rest).has_value());
    }
  }
}

TEST_CASE("infeasible targets") {
  CHECK_THROWS_AS(build_covnum({{4, 0, 1}, 1}), InfeasibleTarget);
  CHECK_THROWS_AS(build_covnum({{4, 2, 0}, 1}), InfeasibleTarget);
  CHECK_THROWS_AS(build_covnum({{4, 3, 0}, 4}), InfeasibleTarget);
  CHECK_THROWS_AS(build_covnum({{4, 3, 0}, 0}), InfeasibleTarget);
}

TEST_CASE("merge and split of two folds") {
  PLCover c{{{"A", PLMap::from_lifts({q(0), q(1, 2)}, 0)}, {"B", PLMap::from_lifts({q(2, 5), q(4, 5)}, 0)}}, 4,
            CoverTarget::ProjLine};
  const PLCover merged = smooth_merge(c, "A", "B", q(9, 20), q(1, 100));
  REQUIRE(merged.components.size() == 1);
  CHECK(winding(merged.components[0].map) == 0);
  CHECK(image_arcs(merged)[0].arc == Arc::between(q(0), q(4, 5)));
  CHECK(check_fibers(merged).ok);
  for (const auto& x : sample_values(merged)) CHECK(fiber_size(merged, x) == oracle::fiber_count(merged, x));

  const PLCover canonical = smooth_merge(c, "A", "B");
  CHECK(canonical.components.size() == 1);
  CHECK(image_arcs(canonical)[0].arc == Arc::between(q(0), q(4, 5)));

  const PLCover split = smooth_split(merged, "A", q(3, 4), q(1, 100), "T");
  REQUIRE(split.components.size() == 2);
  CHECK(winding(split.components[0].map) == 0);
  CHECK(winding(split.components[1].map) == 0);
  CHECK(check_fibers(split).ok);
  for (const auto& x : sample_values(split)) CHECK(fiber_size(split, x) == oracle::fiber_count(split, x));

  CHECK_THROWS_AS(smooth_merge(c, "A", "A", q(9, 20), q(1, 100)), std::invalid_argument);
  CHECK_THROWS_AS(smooth_merge(c, "A", "B", q(9, 10), q(1, 100)), std::invalid_argument);
  CHECK_THROWS_AS(smooth_merge(c, "A", "B", q(9, 20), q(1, 10)), std::invalid_argument);
}

TEST_CASE("build json") {
  const CovnumBuild b = build_covnum({{3, 2, 0}, 2});
  const Json j = to_json(b);
  CHECK(j["covering_number"] == 2);
  CHECK(j["spec"]["g"] == 3);
  CHECK(j["cover"]["components"].size() == 2);
}
