#pragma once

#include <cstdint>
#include <vector>

#include "hasse/irreducible.hpp"

namespace hasse {

struct FactorPower {
  MonicIrreducible factor;
  int multiplicity;
};

struct Factorization {
  Scalar unit;
  /// Pairwise distinct, in canonical (degree, lex) order.
  std::vector<FactorPower> factors;

  /// unit * prod factor^multiplicity.
  Poly expand() const;
};

/// Square-free decomposition, distinct-degree splitting, then Cantor-Zassenhaus
/// equal-degree splitting driven by a generator seeded with `seed`.
/// Throws ZeroInput on f == 0.
Factorization factor(const Poly& f, std::uint64_t seed);

/// Square-free parts: pairs (g_i, i) with f/lc = prod g_i^i, each g_i square-free.
std::vector<std::pair<Poly, int>> squarefree_decomposition(const Poly& f);

bool is_squarefree(const Poly& f);

}  // namespace hasse
