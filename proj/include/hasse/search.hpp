#pragma once

// Search over ordered pairs (p, q) of ramified primes for quaternion algebras
// whose curve violates the Hasse principle over F(sqrt(eps * y * p * q)).

#include <cstdint>
#include <vector>

#include "hasse/certificate.hpp"

namespace hasse {

struct SearchOptions {
  int max_deg1 = 1;
  int max_deg2 = 1;
  Exec exec = Exec::Parallel;
  std::uint64_t seed = 0;
};

struct SearchHit {
  MonicIrreducible ram1;
  MonicIrreducible ram2;
  /// Certificate for n = 1 and the first admissible eps.
  HasseCertificate certificate;
};

struct SearchResult {
  /// Ordered by (deg p, lex p, deg q, lex q).
  std::vector<SearchHit> triples;
  std::uint64_t pairs_examined = 0;
};

/// Examines every ordered pair of distinct monic irreducibles p, q different
/// from y with deg p <= max_deg1 and deg q <= max_deg2.
SearchResult search_pairs(const MonicIrreducible& y, const SearchOptions& options);

/// Same, reusing a precomputed D(y).
SearchResult search_pairs(const ExclusionTable& table, const SearchOptions& options);

}  // namespace hasse
