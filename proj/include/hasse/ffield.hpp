#pragma once

// Arithmetic in the prime field F_q, q an odd prime.

#include <compare>
#include <cstdint>
#include <vector>

#include "hasse/errors.hpp"

namespace hasse {

/// Size of the base field. Only odd primes below 2^16 are accepted, which
/// keeps every coefficient product inside 32 bits.
class FieldOrder {
 public:
  static constexpr std::uint32_t kMax = 65521;

  explicit FieldOrder(std::uint32_t q);

  std::uint32_t value() const noexcept { return q_; }

  friend bool operator==(FieldOrder, FieldOrder) = default;

 private:
  std::uint32_t q_;
};

bool is_prime(std::uint64_t n) noexcept;

class Scalar {
 public:
  /// Any integer is accepted and reduced to its canonical residue in [0, q).
  Scalar(FieldOrder order, std::int64_t value);

  std::uint32_t value() const noexcept { return value_; }
  FieldOrder order() const noexcept { return order_; }
  bool is_zero() const noexcept { return value_ == 0; }

  Scalar operator-() const;
  Scalar inverse() const;
  Scalar pow(std::uint64_t e) const;

  friend Scalar operator+(Scalar a, Scalar b);
  friend Scalar operator-(Scalar a, Scalar b);
  friend Scalar operator*(Scalar a, Scalar b);
  friend Scalar operator/(Scalar a, Scalar b);

  friend bool operator==(Scalar a, Scalar b) noexcept {
    return a.order_ == b.order_ && a.value_ == b.value_;
  }

 private:
  FieldOrder order_;
  std::uint32_t value_;
};

/// a^((q-1)/2) == 1. Throws ZeroInput for a == 0.
bool is_square(Scalar a);

/// {1, nu} with nu the least non-square unit.
std::vector<Scalar> square_class_reps(FieldOrder order);

/// Raw residue helpers shared by the polynomial kernels.
inline std::uint32_t mod_inverse(std::uint32_t a, std::uint32_t q) {
  std::int64_t t = 0, new_t = 1, r = q, new_r = a;
  while (new_r != 0) {
    const std::int64_t quot = r / new_r;
    t -= quot * new_t;
    std::swap(t, new_t);
    r -= quot * new_r;
    std::swap(r, new_r);
  }
  if (t < 0) t += q;
  return static_cast<std::uint32_t>(t);
}

inline std::uint32_t mod_pow(std::uint64_t base, std::uint64_t e, std::uint32_t q) {
  std::uint64_t result = 1 % q;
  base %= q;
  while (e > 0) {
    if (e & 1u) result = result * base % q;
    base = base * base % q;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(result);
}

}  // namespace hasse
