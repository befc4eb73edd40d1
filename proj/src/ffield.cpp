#include "hasse/ffield.hpp"

#include <string>
#include <utility>

namespace hasse {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::FieldMismatch: return "FieldMismatch";
    case ErrorKind::ZeroInput: return "ZeroInput";
    case ErrorKind::InvalidDegree: return "InvalidDegree";
    case ErrorKind::InvalidInput: return "InvalidInput";
    case ErrorKind::ModulusMismatch: return "ModulusMismatch";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Error";
}

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

FieldOrder::FieldOrder(std::uint32_t q) : q_(q) {
  if (q < 3 || q > kMax || !is_prime(q)) {
    throw Error(ErrorKind::InvalidInput,
                "field order must be an odd prime below 2^16, got " + std::to_string(q));
  }
}

Scalar::Scalar(FieldOrder order, std::int64_t value) : order_(order) {
  const auto q = static_cast<std::int64_t>(order.value());
  std::int64_t r = value % q;
  if (r < 0) r += q;
  value_ = static_cast<std::uint32_t>(r);
}

static void require_same(Scalar a, Scalar b) {
  if (!(a.order() == b.order())) {
    throw Error(ErrorKind::FieldMismatch, "scalars from F_" + std::to_string(a.order().value()) +
                                              " and F_" + std::to_string(b.order().value()));
  }
}

Scalar Scalar::operator-() const { return Scalar(order_, -static_cast<std::int64_t>(value_)); }

Scalar Scalar::inverse() const {
  if (value_ == 0) throw Error(ErrorKind::DivisionByZero, "inverse of zero");
  return Scalar(order_, mod_inverse(value_, order_.value()));
}

Scalar Scalar::pow(std::uint64_t e) const {
  return Scalar(order_, mod_pow(value_, e, order_.value()));
}

Scalar operator+(Scalar a, Scalar b) {
  require_same(a, b);
  return Scalar(a.order_, static_cast<std::int64_t>(a.value_) + b.value_);
}

Scalar operator-(Scalar a, Scalar b) {
  require_same(a, b);
  return Scalar(a.order_, static_cast<std::int64_t>(a.value_) - b.value_);
}

Scalar operator*(Scalar a, Scalar b) {
  require_same(a, b);
  return Scalar(a.order_, static_cast<std::int64_t>(a.value_) * b.value_);
}

Scalar operator/(Scalar a, Scalar b) {
  require_same(a, b);
  return a * b.inverse();
}

bool is_square(Scalar a) {
  if (a.is_zero()) throw Error(ErrorKind::ZeroInput, "squareness of zero is undefined");
  return a.pow((a.order().value() - 1) / 2).value() == 1;
}

std::vector<Scalar> square_class_reps(FieldOrder order) {
  for (std::uint32_t v = 2; v < order.value(); ++v) {
    Scalar nu(order, v);
    if (!is_square(nu)) return {Scalar(order, 1), nu};
  }
  // Unreachable for odd q: exactly half the units are non-squares.
  throw Error(ErrorKind::InvalidInput, "no non-square found");
}

}  // namespace hasse
