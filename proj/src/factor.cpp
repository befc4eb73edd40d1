#include "hasse/factor.hpp"

#include <algorithm>
#include <random>

#include "hasse/residue.hpp"

namespace hasse {

namespace {

// f(t) = g(t^p) with p = char; returns g^(1/p) coefficientwise (Frobenius is
// the identity on F_p).
Poly pth_root(const Poly& f) {
  const std::uint32_t p = f.q();
  std::vector<Poly::Coeff> c;
  const auto fc = f.coeffs();
  for (std::size_t i = 0; i < fc.size(); i += p) c.push_back(fc[i]);
  return Poly(f.order(), std::move(c));
}

void squarefree_rec(const Poly& f, int scale, std::vector<std::pair<Poly, int>>& out) {
  if (f.degree() < 1) return;
  Poly c = gcd(f, f.derivative());
  Poly w = f / c;
  int i = 1;
  while (!w.is_one()) {
    Poly y = gcd(w, c);
    Poly fac = w / y;
    if (!fac.is_one()) out.emplace_back(fac, i * scale);
    w = std::move(y);
    c = c / w;
    ++i;
  }
  if (!c.is_one()) squarefree_rec(pth_root(c), scale * static_cast<int>(f.q()), out);
}

// Distinct-degree split of a monic square-free g: pairs (product of all
// degree-d factors, d).
std::vector<std::pair<Poly, int>> distinct_degree(Poly g) {
  std::vector<std::pair<Poly, int>> out;
  const Poly t = Poly::t(g.order());
  Poly h = t % g;
  for (int d = 1; g.degree() >= 2 * d; ++d) {
    h = frobenius(h, g);
    Poly part = gcd(h - t, g);
    if (!part.is_one()) {
      out.emplace_back(part, d);
      g = g / part;
      h = h % g;
    }
  }
  if (g.degree() >= 1) out.emplace_back(g, g.degree());
  return out;
}

Poly random_below(const Poly& g, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint32_t> coeff(0, g.q() - 1);
  std::vector<Poly::Coeff> c(static_cast<std::size_t>(g.degree()));
  for (auto& x : c) x = coeff(rng);
  return Poly(g.order(), std::move(c));
}

// Cantor-Zassenhaus for odd q: g monic, square-free, all factors of degree d.
void equal_degree(const Poly& g, int d, std::mt19937_64& rng, std::vector<Poly>& out) {
  if (g.degree() == d) {
    out.push_back(g);
    return;
  }
  const std::uint64_t half = (g.q() - 1) / 2;
  for (;;) {
    const Poly a = random_below(g, rng);
    if (a.degree() < 1) continue;
    Poly split = gcd(a, g);
    if (split.is_one()) {
      // a^((q^d - 1)/2) = (a * a^q * ... * a^(q^(d-1)))^((q-1)/2)
      const Poly b = powmod(frobenius_norm(a, d, g), half, g);
      split = gcd(b - Poly::constant(g.order(), 1), g);
    }
    if (!split.is_one() && split.degree() < g.degree()) {
      equal_degree(split, d, rng, out);
      equal_degree(g / split, d, rng, out);
      return;
    }
  }
}

}  // namespace

Poly Factorization::expand() const {
  Poly acc = Poly::constant(unit);
  for (const auto& fp : factors) {
    for (int i = 0; i < fp.multiplicity; ++i) acc = acc * fp.factor.poly();
  }
  return acc;
}

std::vector<std::pair<Poly, int>> squarefree_decomposition(const Poly& f) {
  if (f.is_zero()) throw Error(ErrorKind::ZeroInput, "square-free decomposition of zero");
  std::vector<std::pair<Poly, int>> out;
  squarefree_rec(f.monic(), 1, out);
  return out;
}

bool is_squarefree(const Poly& f) {
  if (f.is_zero()) return false;
  return gcd(f, f.derivative()).is_one();
}

Factorization factor(const Poly& f, std::uint64_t seed) {
  if (f.is_zero()) throw Error(ErrorKind::ZeroInput, "factorization of zero");
  Factorization result{f.lead(), {}};
  std::mt19937_64 rng(seed);
  for (const auto& [part, mult] : squarefree_decomposition(f)) {
    for (const auto& [block, d] : distinct_degree(part)) {
      std::vector<Poly> irreducibles;
      equal_degree(block, d, rng, irreducibles);
      for (auto& p : irreducibles) {
        result.factors.push_back({MonicIrreducible::trusted(std::move(p)), mult});
      }
    }
  }
  std::sort(result.factors.begin(), result.factors.end(),
            [](const FactorPower& a, const FactorPower& b) {
              return canonical_less(a.factor, b.factor);
            });
  return result;
}

}  // namespace hasse
