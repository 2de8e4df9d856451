#include "realcover/bn_calc.hpp"

#include <stdexcept>

namespace realcover {

namespace {

const char* const kGeneralCurve = "holds for a general real curve of this type, not for every curve";

}  // namespace

long rho(int g, int k, int r) {
  if (g < 0 || k < 1 || r < 1) throw std::invalid_argument("rho needs g >= 0, k >= 1, r >= 1");
  return static_cast<long>(g) - static_cast<long>(r + 1) * (g - k + r);
}

std::optional<long> expected_W1k(int g, int k) {
  if (k > g) throw std::invalid_argument("expected_W1k needs k <= g");
  const long value = rho(g, k, 1);
  if (value < 0) return std::nullopt;
  return value;
}

BNDims dims(int g, int k) {
  if (g < 2) throw std::invalid_argument("dims needs g >= 2");
  BNDims d;
  d.hurwitz = 2L * k + 2L * g - 2;
  d.moduli = 3L * g - 3;
  d.image_bound = d.moduli + rho(g, k, 1);
  return d;
}

std::string to_string(FactKind kind) {
  switch (kind) {
    case FactKind::NoRealPencil: return "NoRealPencil";
    case FactKind::TwoPencils: return "TwoPencils";
    case FactKind::Pencil: return "Pencil";
    case FactKind::NotRecorded: return "NotRecorded";
  }
  return "NotRecorded";
}

const std::vector<Fact>& facts() {
  static const std::vector<Fact> table = {
      {{4, 0, 1, 3}, FactKind::NoRealPencil, {}, "a genus 4 curve without real points has no real pencil of degree 3",
       kGeneralCurve},
      {{4, 1, 0, 3},
       FactKind::TwoPencils,
       {DegreeVector({3}), DegreeVector({1})},
       "a non-hyperelliptic curve of type (4,1,0) has exactly two real pencils of degree 3, of topological degrees "
       "(3) and (1)",
       kGeneralCurve},
      {{8, 1, 0, 5},
       FactKind::Pencil,
       {DegreeVector({5})},
       "a curve of type (8,1,0) has a base-point-free real pencil of degree 5 and topological degree (5)",
       kGeneralCurve},
  };
  return table;
}

Fact lookup_fact(const FactKey& key) {
  for (const auto& f : facts())
    if (f.key == key) return f;
  Fact missing;
  missing.key = key;
  return missing;
}

Json to_json(const BNDims& d) {
  Json j;
  j["hurwitz"] = d.hurwitz;
  j["moduli"] = d.moduli;
  j["image_bound"] = d.image_bound;
  return j;
}

Json to_json(const Fact& f) {
  Json j;
  j["g"] = f.key.g;
  j["s"] = f.key.s;
  j["a"] = f.key.a;
  j["k"] = f.key.k;
  j["fact"] = to_string(f.kind);
  if (f.kind == FactKind::NotRecorded) return j;
  Json deg = Json::array();
  for (const auto& d : f.degrees) deg.push_back(d.entries());
  j["degrees"] = deg;
  j["statement"] = f.statement;
  j["caveat"] = f.caveat;
  return j;
}

}  // namespace realcover
