#pragma once

// Weil polynomials X^2 + a1*X + mu*y, arithmetic in A[pi], and the
// excluded-prime set P(y) for d = 2.

#include <cstdint>
#include <vector>

#include "hasse/irreducible.hpp"
#include "hasse/parallel.hpp"

namespace hasse {

/// lcm(q^i - 1 : 1 <= i <= d). Throws InvalidInput on overflow or d == 0.
std::uint64_t lq(FieldOrder order, unsigned d);

/// n = lq(d)^2 * d^2 / gcd(d^2, q^2 - 1), d >= 2.
std::uint64_t exponent_n(FieldOrder order, unsigned d);

/// Minimal polynomial M(X) = X^2 + a1*X + mu*y of a Weil number pi.
class WeilPoly {
 public:
  /// Validates deg(a1) <= deg(y)/2, mu != 0 and irreducibility over F_inf.
  WeilPoly(Poly a1, Scalar mu, MonicIrreducible y);

  const Poly& a1() const noexcept { return a1_; }
  Scalar mu() const noexcept { return mu_; }
  const MonicIrreducible& y() const noexcept { return y_; }
  FieldOrder order() const noexcept { return y_.order(); }

  /// mu * y, the norm of pi.
  const Poly& constant_term() const noexcept { return c_; }
  /// a1^2 - 4*mu*y.
  Poly discriminant() const;

  friend bool operator==(const WeilPoly& a, const WeilPoly& b) noexcept {
    return a.mu_ == b.mu_ && a.a1_ == b.a1_ && a.y_ == b.y_;
  }

 private:
  Poly a1_;
  Scalar mu_;
  MonicIrreducible y_;
  Poly c_;
};

/// x^2 + a*x + b irreducible over F_q((1/t)) for odd q: the discriminant has
/// odd degree, or even degree with a non-square leading coefficient.
bool nonsquare_at_infinity(const Poly& discriminant);

/// All M with deg(a1) <= deg(y)/2, mu in F_q^x, irreducible over F_inf.
/// Ordered by mu ascending, then a1 in canonical order.
std::vector<WeilPoly> enumerate_weil(const MonicIrreducible& y);

/// u + v*pi in A[pi] = A[X]/(M).
class QuadExtElem {
 public:
  QuadExtElem(Poly u, Poly v, WeilPoly modulus);

  static QuadExtElem one(const WeilPoly& modulus);
  static QuadExtElem pi(const WeilPoly& modulus);

  const Poly& u() const noexcept { return u_; }
  const Poly& v() const noexcept { return v_; }
  const WeilPoly& modulus() const noexcept { return m_; }
  bool is_zero() const noexcept { return u_.is_zero() && v_.is_zero(); }

  friend bool operator==(const QuadExtElem& a, const QuadExtElem& b) noexcept {
    return a.m_ == b.m_ && a.u_ == b.u_ && a.v_ == b.v_;
  }

 private:
  Poly u_, v_;
  WeilPoly m_;
};

/// (u1+v1 pi)(u2+v2 pi) reduced with pi^2 = -a1 pi - mu y.
/// Throws ModulusMismatch for different minimal polynomials.
QuadExtElem ext_mul(const QuadExtElem& x, const QuadExtElem& z);
QuadExtElem ext_sub(const QuadExtElem& x, const QuadExtElem& z);
QuadExtElem ext_pow(const QuadExtElem& x, std::uint64_t e);

/// u^2 - a1*u*v + mu*y*v^2.
Poly norm(const QuadExtElem& x);

/// pi^(2n) - y^n with n = exponent_n(q, 2), computed exactly.
QuadExtElem frobenius_test_element(const WeilPoly& w);

struct NormEntry {
  WeilPoly source;
  Poly value;
  bool is_zero;
};

/// One entry of D(y) per Weil polynomial of enumerate_weil(y).
std::vector<NormEntry> dset(const MonicIrreducible& y, Exec exec = Exec::Parallel);

/// D(y) computed once, queried for many candidate primes.
class ExclusionTable {
 public:
  explicit ExclusionTable(const MonicIrreducible& y, Exec exec = Exec::Parallel);

  const MonicIrreducible& y() const noexcept { return y_; }
  const std::vector<NormEntry>& entries() const noexcept { return entries_; }

  /// True iff p divides no nonzero entry, i.e. p is not in P(y).
  /// Throws InvalidInput when p == y.
  bool excludes(const MonicIrreducible& p) const;

 private:
  MonicIrreducible y_;
  std::vector<NormEntry> entries_;
};

bool p_excluded(const MonicIrreducible& p, const MonicIrreducible& y);

/// P(y): every prime divisor of a nonzero entry of D(y), sorted canonically.
std::vector<MonicIrreducible> pset(const MonicIrreducible& y, std::uint64_t seed);
std::vector<MonicIrreducible> pset(const ExclusionTable& table, std::uint64_t seed);

}  // namespace hasse
