#include "hasse/residue.hpp"

namespace hasse {

Poly frobenius_norm(const Poly& x, int k, const Poly& m) {
  Poly conj = x % m;
  Poly prod = conj;
  for (int i = 1; i < k; ++i) {
    conj = frobenius(conj, m);
    prod = mulmod(prod, conj, m);
  }
  return prod;
}

int residue_symbol(const Poly& a, const MonicIrreducible& p) {
  require_same_field(a, p.poly());
  const Poly r = a % p.poly();
  if (r.is_zero()) return 0;
  // The norm down to F_q is a nonzero constant.
  const Poly norm = frobenius_norm(r, p.degree(), p.poly());
  return is_square(norm.lead()) ? 1 : -1;
}

int valuation(const Poly& f, const MonicIrreducible& p) {
  require_same_field(f, p.poly());
  if (f.is_zero()) throw Error(ErrorKind::ZeroInput, "valuation of zero");
  int k = 0;
  Poly g = f;
  for (;;) {
    auto [quot, rem] = divrem(g, p.poly());
    if (!rem.is_zero()) return k;
    g = std::move(quot);
    ++k;
  }
}

}  // namespace hasse
