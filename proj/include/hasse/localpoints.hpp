#pragma once

// Local points of X^D over every completion of K: the place at infinity, the
// two ramified primes, and the unramified primes l in Lambda, where explicit
// (a, c) witnesses are searched for.

#include <cstdint>
#include <optional>
#include <vector>

#include "hasse/parallel.hpp"
#include "hasse/splitting.hpp"

namespace hasse {

/// a^2 - 4*c*l is irreducible over F_p, F_q and F_inf, i.e. x^2 - a*x + c*l
/// has a splitting field in which none of p, q, infinity splits.
struct LocalWitness {
  MonicIrreducible l;
  Poly a;
  Scalar c;
};

enum class Ramified { First, Second };

struct RamifiedCheck {
  SplitType behavior = SplitType::Split;
  bool ok = false;
  /// Set when the prime ramifies in K: the mu making F(sqrt(mu*r)) non-split
  /// at the other ramified prime and at infinity.
  std::optional<Scalar> mu;
};

struct LocalReport {
  SplitType infinity = SplitType::Split;
  bool infinity_ok = false;
  RamifiedCheck ram1;
  RamifiedCheck ram2;
  /// 2(deg p + deg q) - 2: every l of higher degree has local points without a witness.
  int lambda_max_degree = 0;
  std::optional<int> fast_m;
  /// Witnesses were searched for every l in Lambda of degree <= this.
  int explicit_max_degree = 0;
  std::vector<LocalWitness> witnesses;
  /// Members of Lambda below the explicit cutoff without a witness.
  std::vector<MonicIrreducible> missing;

  bool ok() const noexcept {
    return infinity_ok && ram1.ok && ram2.ok && missing.empty();
  }
};

/// Local points at the places above infinity.
bool local_infinity(const QuaternionData& d, const QuadraticField& k);

/// First mu (square-class representative) with neither `other` nor infinity
/// split in F(sqrt(mu*r)).
std::optional<Scalar> ramified_mu(const MonicIrreducible& r, const MonicIrreducible& other);

RamifiedCheck local_ramified_prime(const QuaternionData& d, const QuadraticField& k, Ramified which);

/// 2(deg p + deg q) - 2.
int lambda_cutoff(const QuaternionData& d);

/// Monic irreducibles l not in {p, q} with deg l <= max_degree, canonical order.
std::vector<MonicIrreducible> lambda_set(const QuaternionData& d, int max_degree);
std::vector<MonicIrreducible> lambda_set(const QuaternionData& d);

/// The witness predicate evaluated directly with residue_symbol and valuation.
bool witness_holds(const QuaternionData& d, const LocalWitness& w);

/// First (c, a) in canonical order (c ascending, then a by degree and lex,
/// deg a <= deg l / 2) satisfying witness_holds. Throws InvalidInput for l in {p, q}.
std::optional<LocalWitness> witness_search(const QuaternionData& d, const MonicIrreducible& l);

/// Whether every b coprime to pq with deg b <= deg p + deg q - 1 has some a of
/// degree <= m with (a^2 - b / p) = (a^2 - b / q) = -1.
bool fast_bound_holds(const QuaternionData& d, int m);

/// Least m in [0, deg p + deg q - 2] for which fast_bound_holds, if any.
std::optional<int> fast_m_bound(const QuaternionData& d);

/// Every local check. Throws InvalidInput if K does not split D.
LocalReport local_all(const QuaternionData& d, const QuadraticField& k, Exec exec = Exec::Parallel);

/// Witness search over a list of places; slots follow the input order.
std::vector<std::optional<LocalWitness>> search_witnesses(const QuaternionData& d,
                                                          const std::vector<MonicIrreducible>& places,
                                                          Exec exec);

}  // namespace hasse
