#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "hasse/poly.hpp"

namespace hasse {

/// A monic irreducible polynomial of degree >= 1: a finite place of F_q(t).
class MonicIrreducible {
 public:
  /// Checks monicity and irreducibility; throws InvalidInput otherwise.
  explicit MonicIrreducible(Poly poly);

  /// Skips the irreducibility test. For producers that already know.
  static MonicIrreducible trusted(Poly poly) { return MonicIrreducible(std::move(poly), 0); }

  const Poly& poly() const noexcept { return poly_; }
  int degree() const noexcept { return poly_.degree(); }
  FieldOrder order() const noexcept { return poly_.order(); }

  friend bool operator==(const MonicIrreducible& a, const MonicIrreducible& b) noexcept {
    return a.poly_ == b.poly_;
  }

 private:
  MonicIrreducible(Poly poly, int) : poly_(std::move(poly)) {}
  Poly poly_;
};

inline bool canonical_less(const MonicIrreducible& a, const MonicIrreducible& b) noexcept {
  return canonical_less(a.poly(), b.poly());
}

/// x^q mod m.
Poly frobenius(const Poly& x, const Poly& m);

/// Rabin's test. Throws InvalidDegree on constants.
bool is_irreducible(const Poly& f);

/// Number of monic irreducibles of the given degree (Gauss's formula).
std::uint64_t gauss_count(FieldOrder order, int degree);

/// Visits every monic irreducible of exactly `degree` in canonical order.
/// Returning false from the visitor stops the walk.
void for_each_monic_irreducible(FieldOrder order, int degree,
                                const std::function<bool(const MonicIrreducible&)>& visit);

std::vector<MonicIrreducible> enumerate_monic_irreducibles(FieldOrder order, int degree);

}  // namespace hasse
