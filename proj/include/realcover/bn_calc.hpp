#pragma once

#include <optional>
#include <string>
#include <vector>

#include "realcover/topology.hpp"

namespace realcover {

/// Brill-Noether number g - (r + 1)(g - k + r). Requires g >= 0, k >= 1, r >= 1.
long rho(int g, int k, int r = 1);

/// Expected dimension of the real pencils of degree k on a general real
/// curve of genus g; nullopt means the locus is empty. Requires k <= g.
std::optional<long> expected_W1k(int g, int k);

struct BNDims {
  long hurwitz = 0;      // 2k + 2g - 2
  long moduli = 0;       // 3g - 3
  long image_bound = 0;  // 3g - 3 + rho
};

/// Requires g >= 2.
BNDims dims(int g, int k);

enum class FactKind { NoRealPencil, TwoPencils, Pencil, NotRecorded };

std::string to_string(FactKind kind);

struct FactKey {
  int g = 0;
  int s = 0;
  int a = 0;
  int k = 0;
  friend bool operator==(const FactKey&, const FactKey&) = default;
};

struct Fact {
  FactKey key;
  FactKind kind = FactKind::NotRecorded;
  std::vector<DegreeVector> degrees;  // topological degrees of the pencils, if any
  std::string statement;
  std::string caveat;
};

const std::vector<Fact>& facts();

/// Table entry for the key, or a NotRecorded fact.
Fact lookup_fact(const FactKey& key);

Json to_json(const BNDims& d);
Json to_json(const Fact& f);

}  // namespace realcover
