#include "hasse/weil.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <string>

#include "hasse/factor.hpp"

namespace hasse {

namespace {

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  unsigned __int128 r = static_cast<unsigned __int128>(a) * b;
  if (r > UINT64_MAX) throw Error(ErrorKind::InvalidInput, "integer overflow in exponent");
  return static_cast<std::uint64_t>(r);
}

Poly poly_pow(const Poly& base, std::uint64_t e) {
  Poly result = Poly::constant(base.order(), 1);
  Poly b = base;
  while (e > 0) {
    if (e & 1u) result = mul(result, b);
    e >>= 1;
    if (e > 0) b = square(b);
  }
  return result;
}

void require_same_modulus(const QuadExtElem& x, const QuadExtElem& z) {
  if (!(x.modulus() == z.modulus())) {
    throw Error(ErrorKind::ModulusMismatch, "elements of different quadratic extensions");
  }
}

}  // namespace

std::uint64_t lq(FieldOrder order, unsigned d) {
  if (d == 0) throw Error(ErrorKind::InvalidInput, "lq needs d >= 1");
  std::uint64_t result = 1;
  std::uint64_t power = 1;
  for (unsigned i = 1; i <= d; ++i) {
    power = checked_mul(power, order.value());
    const std::uint64_t term = power - 1;
    result = checked_mul(result / std::gcd(result, term), term);
  }
  return result;
}

std::uint64_t exponent_n(FieldOrder order, unsigned d) {
  if (d < 2) throw Error(ErrorKind::InvalidInput, "exponent_n needs d >= 2");
  const std::uint64_t l = lq(order, d);
  const std::uint64_t d2 = static_cast<std::uint64_t>(d) * d;
  const std::uint64_t q = order.value();
  const std::uint64_t g = std::gcd(d2, q * q - 1);
  return checked_mul(checked_mul(l, l), d2 / g);
}

bool nonsquare_at_infinity(const Poly& discriminant) {
  if (discriminant.is_zero()) return false;
  if (discriminant.degree() % 2 != 0) return true;
  return !is_square(discriminant.lead());
}

WeilPoly::WeilPoly(Poly a1, Scalar mu, MonicIrreducible y)
    : a1_(std::move(a1)), mu_(mu), y_(std::move(y)), c_(y_.poly() * mu_) {
  require_same_field(a1_, y_.poly());
  if (mu_.is_zero()) throw Error(ErrorKind::InvalidInput, "mu must be a unit");
  if (2 * a1_.degree() > y_.degree()) {
    throw Error(ErrorKind::InvalidInput, "deg(a1) exceeds deg(y)/2");
  }
  if (!nonsquare_at_infinity(discriminant())) {
    throw Error(ErrorKind::InvalidInput, "X^2 + (" + format_poly(a1_) + ")X + " +
                                             format_poly(c_) + " splits over F_inf");
  }
}

Poly WeilPoly::discriminant() const {
  return square(a1_) - c_ * Scalar(order(), 4);
}

std::vector<WeilPoly> enumerate_weil(const MonicIrreducible& y) {
  const FieldOrder order = y.order();
  std::vector<WeilPoly> out;
  const auto a1s = polys_up_to(order, y.degree() / 2);
  for (std::uint32_t m = 1; m < order.value(); ++m) {
    const Scalar mu(order, m);
    const Poly c = y.poly() * mu;
    for (const auto& a1 : a1s) {
      if (nonsquare_at_infinity(square(a1) - c * Scalar(order, 4))) out.emplace_back(a1, mu, y);
    }
  }
  return out;
}

QuadExtElem::QuadExtElem(Poly u, Poly v, WeilPoly modulus)
    : u_(std::move(u)), v_(std::move(v)), m_(std::move(modulus)) {
  require_same_field(u_, m_.y().poly());
  require_same_field(v_, m_.y().poly());
}

QuadExtElem QuadExtElem::one(const WeilPoly& modulus) {
  return QuadExtElem(Poly::constant(modulus.order(), 1), Poly(modulus.order()), modulus);
}

QuadExtElem QuadExtElem::pi(const WeilPoly& modulus) {
  return QuadExtElem(Poly(modulus.order()), Poly::constant(modulus.order(), 1), modulus);
}

QuadExtElem ext_mul(const QuadExtElem& x, const QuadExtElem& z) {
  require_same_modulus(x, z);
  const WeilPoly& m = x.modulus();
  const Poly uu = mul(x.u(), z.u());
  const Poly vv = mul(x.v(), z.v());
  // u1*v2 + u2*v1 = (u1+v1)(u2+v2) - u1*u2 - v1*v2
  const Poly cross = mul(x.u() + x.v(), z.u() + z.v()) - uu - vv;
  Poly u = uu - mul(m.constant_term(), vv);
  Poly v = cross - mul(m.a1(), vv);
  return QuadExtElem(std::move(u), std::move(v), m);
}

QuadExtElem ext_sub(const QuadExtElem& x, const QuadExtElem& z) {
  require_same_modulus(x, z);
  return QuadExtElem(x.u() - z.u(), x.v() - z.v(), x.modulus());
}

QuadExtElem ext_pow(const QuadExtElem& x, std::uint64_t e) {
  QuadExtElem result = QuadExtElem::one(x.modulus());
  QuadExtElem base = x;
  while (e > 0) {
    if (e & 1u) result = ext_mul(result, base);
    e >>= 1;
    if (e > 0) base = ext_mul(base, base);
  }
  return result;
}

Poly norm(const QuadExtElem& x) {
  const WeilPoly& m = x.modulus();
  return square(x.u()) - mul(m.a1(), mul(x.u(), x.v())) + mul(m.constant_term(), square(x.v()));
}

QuadExtElem frobenius_test_element(const WeilPoly& w) {
  const std::uint64_t n = exponent_n(w.order(), 2);
  const QuadExtElem power = ext_pow(QuadExtElem::pi(w), 2 * n);
  const Poly yn = poly_pow(w.y().poly(), n);
  return QuadExtElem(power.u() - yn, power.v(), w);
}

std::vector<NormEntry> dset(const MonicIrreducible& y, Exec exec) {
  const auto weil = enumerate_weil(y);
  std::vector<std::optional<NormEntry>> slots(weil.size());
  for_each_index(weil.size(), exec, [&](std::size_t i) {
    Poly value = norm(frobenius_test_element(weil[i]));
    const bool zero = value.is_zero();
    slots[i] = NormEntry{weil[i], std::move(value), zero};
  });
  std::vector<NormEntry> out;
  out.reserve(slots.size());
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

ExclusionTable::ExclusionTable(const MonicIrreducible& y, Exec exec)
    : y_(y), entries_(dset(y, exec)) {}

bool ExclusionTable::excludes(const MonicIrreducible& p) const {
  require_same_field(p.poly(), y_.poly());
  if (p == y_) throw Error(ErrorKind::InvalidInput, "p must differ from y");
  return std::none_of(entries_.begin(), entries_.end(), [&](const NormEntry& e) {
    return !e.is_zero && (e.value % p.poly()).is_zero();
  });
}

bool p_excluded(const MonicIrreducible& p, const MonicIrreducible& y) {
  if (p == y) throw Error(ErrorKind::InvalidInput, "p must differ from y");
  return ExclusionTable(y).excludes(p);
}

std::vector<MonicIrreducible> pset(const ExclusionTable& table, std::uint64_t seed) {
  std::vector<MonicIrreducible> primes;
  for (const auto& e : table.entries()) {
    if (e.is_zero) continue;
    for (const auto& fp : factor(e.value, seed).factors) primes.push_back(fp.factor);
  }
  std::sort(primes.begin(), primes.end(),
            [](const MonicIrreducible& a, const MonicIrreducible& b) { return canonical_less(a, b); });
  primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
  return primes;
}

std::vector<MonicIrreducible> pset(const MonicIrreducible& y, std::uint64_t seed) {
  return pset(ExclusionTable(y), seed);
}

}  // namespace hasse
