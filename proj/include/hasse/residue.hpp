#pragma once

#include "hasse/irreducible.hpp"

namespace hasse {

/// Quadratic residue symbol (a/p) in {-1, 0, +1}: 0 when p | a, otherwise
/// +1 iff a is a square mod p. Evaluated as a^((|p|-1)/2) mod p, where the
/// exponent is split as ((q-1)/2) * (1 + q + ... + q^(deg p - 1)) so that
/// only q-th powers mod p are ever taken.
int residue_symbol(const Poly& a, const MonicIrreducible& p);

/// Largest k with p^k | f. Throws ZeroInput on f == 0.
int valuation(const Poly& f, const MonicIrreducible& p);

/// Product of the Frobenius conjugates x * x^q * ... * x^(q^(k-1)) mod m.
Poly frobenius_norm(const Poly& x, int k, const Poly& m);

}  // namespace hasse
