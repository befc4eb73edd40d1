#pragma once

// Dense univariate polynomials over F_q: the ring A = F_q[t].

#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hasse/ffield.hpp"

namespace hasse {

class Poly {
 public:
  using Coeff = std::uint32_t;

  /// Degree reported for the zero polynomial (stands in for -infinity).
  static constexpr int kZeroDegree = -1;

  explicit Poly(FieldOrder order) : order_(order) {}
  Poly(FieldOrder order, std::vector<Coeff> coeffs);
  /// Little-endian coefficients; any integer is reduced mod q.
  Poly(FieldOrder order, std::initializer_list<std::int64_t> coeffs);

  static Poly constant(FieldOrder order, std::int64_t c);
  static Poly constant(Scalar c);
  static Poly monomial(FieldOrder order, std::int64_t c, std::size_t k);
  static Poly t(FieldOrder order) { return monomial(order, 1, 1); }

  FieldOrder order() const noexcept { return order_; }
  std::uint32_t q() const noexcept { return order_.value(); }
  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const noexcept { return c_.empty(); }
  bool is_constant() const noexcept { return c_.size() <= 1; }
  bool is_one() const noexcept { return c_.size() == 1 && c_[0] == 1; }
  bool is_monic() const noexcept { return !c_.empty() && c_.back() == 1; }

  std::span<const Coeff> coeffs() const noexcept { return c_; }
  Coeff operator[](std::size_t i) const noexcept { return i < c_.size() ? c_[i] : 0; }
  /// Leading coefficient. Throws ZeroInput on the zero polynomial.
  Scalar lead() const;

  Poly monic() const;
  Poly derivative() const;
  Scalar eval(Scalar x) const;
  /// Multiplication by t^k.
  Poly shifted(std::size_t k) const;

  Poly operator-() const;
  Poly& operator+=(const Poly& other);
  Poly& operator-=(const Poly& other);
  Poly& operator*=(const Poly& other);
  Poly& operator*=(Scalar s);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, Scalar s) { return a *= s; }
  friend Poly operator*(Scalar s, Poly a) { return a *= s; }

  friend bool operator==(const Poly& a, const Poly& b) noexcept {
    return a.order_ == b.order_ && a.c_ == b.c_;
  }

  /// Mutable access for kernels; caller must call normalize() afterwards.
  std::vector<Coeff>& raw() noexcept { return c_; }
  void normalize() noexcept;

 private:
  FieldOrder order_;
  std::vector<Coeff> c_;
};

void require_same_field(const Poly& a, const Poly& b);

/// Canonical order: by degree, then lexicographically on coefficient vectors
/// starting from the constant term.
bool canonical_less(const Poly& a, const Poly& b) noexcept;

/// Every polynomial of degree <= max_degree, the zero polynomial first, in
/// canonical order.
std::vector<Poly> polys_up_to(FieldOrder order, int max_degree);

/// Plain O(n*m) product. Reference for mul().
Poly mul_schoolbook(const Poly& a, const Poly& b);
/// Product with Karatsuba splitting above a size threshold.
Poly mul(const Poly& a, const Poly& b);
Poly square(const Poly& a);

/// (quotient, remainder) with deg(rem) < deg(divisor).
std::pair<Poly, Poly> divrem(const Poly& f, const Poly& g);
Poly operator%(const Poly& f, const Poly& g);
Poly operator/(const Poly& f, const Poly& g);

/// Monic gcd; gcd(0, 0) = 0.
Poly gcd(Poly a, Poly b);

Poly mulmod(const Poly& a, const Poly& b, const Poly& m);
/// f^e mod m by square-and-multiply. deg(m) >= 1.
Poly powmod(const Poly& f, std::uint64_t e, const Poly& m);

/// Text form: "2*t^3+t+1", "0". Descending degree, unit coefficients omitted.
std::string format_poly(const Poly& f);
/// Accepts sums of `c*t^k`, `c t^k`, `ct^k`, `t^k`, `t`, `c` (with optional
/// leading signs), or a bracketed little-endian list `[c0,c1,...]`.
/// Coefficients must be written below q.
Poly parse_poly(std::string_view text, FieldOrder order);

}  // namespace hasse
