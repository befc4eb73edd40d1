#include "hasse/irreducible.hpp"

#include <string>

namespace hasse {

namespace {

std::vector<int> prime_divisors(int n) {
  std::vector<int> out;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      out.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

int moebius(int n) {
  int result = 1;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      n /= p;
      if (n % p == 0) return 0;
      result = -result;
    }
  }
  if (n > 1) result = -result;
  return result;
}

bool has_root(const Poly& f) {
  const auto q = f.q();
  const auto c = f.coeffs();
  for (std::uint32_t x = 0; x < q; ++x) {
    std::uint64_t acc = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = (acc * x + *it) % q;
    if (acc == 0) return true;
  }
  return false;
}

bool rabin(const Poly& monic_f) {
  const int n = monic_f.degree();
  if (n == 1) return true;
  const Poly t = Poly::t(monic_f.order());
  const auto primes = prime_divisors(n);

  // h_k = t^(q^k) mod f for k = 1..n; keep the ones at n/r.
  Poly h = t % monic_f;
  for (int k = 1; k <= n; ++k) {
    h = frobenius(h, monic_f);
    for (int r : primes) {
      if (k == n / r && !gcd(h - t, monic_f).is_one()) return false;
    }
  }
  return h == t % monic_f;
}

}  // namespace

MonicIrreducible::MonicIrreducible(Poly poly) : poly_(std::move(poly)) {
  if (!poly_.is_monic() || poly_.degree() < 1) {
    throw Error(ErrorKind::InvalidInput, "'" + format_poly(poly_) + "' is not monic of degree >= 1");
  }
  if (!is_irreducible(poly_)) {
    throw Error(ErrorKind::InvalidInput, "'" + format_poly(poly_) + "' is not irreducible");
  }
}

Poly frobenius(const Poly& x, const Poly& m) { return powmod(x, m.q(), m); }

bool is_irreducible(const Poly& f) {
  if (f.degree() < 1) {
    throw Error(ErrorKind::InvalidDegree, "irreducibility of a constant is undefined");
  }
  return rabin(f.monic());
}

std::uint64_t gauss_count(FieldOrder order, int degree) {
  if (degree < 1) throw Error(ErrorKind::InvalidDegree, "degree must be positive");
  std::int64_t sum = 0;
  for (int d = 1; d <= degree; ++d) {
    if (degree % d != 0) continue;
    std::int64_t power = 1;
    for (int i = 0; i < degree / d; ++i) power *= order.value();
    sum += moebius(d) * power;
  }
  return static_cast<std::uint64_t>(sum / degree);
}

void for_each_monic_irreducible(FieldOrder order, int degree,
                                const std::function<bool(const MonicIrreducible&)>& visit) {
  if (degree < 1) throw Error(ErrorKind::InvalidDegree, "degree must be positive");
  const std::uint32_t q = order.value();
  const auto n = static_cast<std::size_t>(degree);
  std::vector<Poly::Coeff> c(n + 1, 0);
  c[n] = 1;
  for (;;) {
    Poly f(order, c);
    if (degree == 1 || (!has_root(f) && rabin(f))) {
      if (!visit(MonicIrreducible::trusted(std::move(f)))) return;
    }
    // Odometer with c[0] most significant, giving lexicographic order.
    std::size_t i = n;
    while (i > 0) {
      --i;
      if (++c[i] < q) break;
      c[i] = 0;
      if (i == 0) return;
    }
  }
}

std::vector<MonicIrreducible> enumerate_monic_irreducibles(FieldOrder order, int degree) {
  std::vector<MonicIrreducible> out;
  for_each_monic_irreducible(order, degree, [&](const MonicIrreducible& f) {
    out.push_back(f);
    return true;
  });
  return out;
}

}  // namespace hasse
