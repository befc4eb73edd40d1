#include "doctest.h"

#include <random>

#include "hasse/factor.hpp"
#include "oracle.hpp"

using namespace hasse;

namespace {

void check_factorization(const Poly& f, const Factorization& fac) {
  CHECK(fac.expand() == f);
  CHECK(fac.unit == f.lead());
  for (std::size_t i = 0; i < fac.factors.size(); ++i) {
    CHECK(fac.factors[i].multiplicity >= 1);
    CHECK(is_irreducible(fac.factors[i].factor.poly()));
    if (i > 0) CHECK(canonical_less(fac.factors[i - 1].factor, fac.factors[i].factor));
  }
}

}  // namespace

TEST_CASE("factorization round trip on random polynomials") {
  std::mt19937_64 rng(31);
  int checked = 0;
  for (std::uint32_t q : {3u, 5u, 7u, 101u}) {
    for (int i = 0; i < 250; ++i) {
      auto v = oracle::random_poly(rng, q, 40);
      if (v.empty()) v = {1};
      const Poly f = oracle::to(v, q);
      check_factorization(f, factor(f, static_cast<std::uint64_t>(i)));
      ++checked;
    }
  }
  CHECK(checked == 1000);
}

TEST_CASE("small factors agree with trial division") {
  const std::uint32_t q = 3;
  for (int n = 1; n <= 5; ++n) {
    for (const auto& f : oracle::monics(q, n)) {
      const auto fac = factor(oracle::to(f, q), 1);
      const bool single = fac.factors.size() == 1 && fac.factors[0].multiplicity == 1;
      CHECK(single == oracle::irreducible(f, q));
    }
  }
}

TEST_CASE("repeated factors and p-th powers") {
  const FieldOrder F(3);
  const Poly g = parse_poly("t^2+1", F);
  const Poly h = parse_poly("t+2", F);
  const Poly f = g * g * g * h * h * Poly::constant(F, 2);
  const auto fac = factor(f, 0);
  REQUIRE(fac.factors.size() == 2);
  CHECK(fac.factors[0].factor.poly() == h);
  CHECK(fac.factors[0].multiplicity == 2);
  CHECK(fac.factors[1].factor.poly() == g);
  CHECK(fac.factors[1].multiplicity == 3);
  CHECK(fac.unit.value() == 2u);

  const auto parts = squarefree_decomposition(f);
  Poly product = Poly::constant(F, 1);
  for (const auto& [part, k] : parts) {
    CHECK(is_squarefree(part));
    for (int i = 0; i < k; ++i) product *= part;
  }
  CHECK(product == f.monic());

  const Poly cube = parse_poly("t^9+2*t^3+1", F);
  check_factorization(cube, factor(cube, 5));
}

TEST_CASE("factorization does not depend on the seed") {
  std::mt19937_64 rng(37);
  const std::uint32_t q = 5;
  for (int i = 0; i < 20; ++i) {
    auto v = oracle::random_poly(rng, q, 30);
    if (v.empty()) continue;
    const Poly f = oracle::to(v, q);
    const auto a = factor(f, 1), b = factor(f, 99);
    REQUIRE(a.factors.size() == b.factors.size());
    for (std::size_t k = 0; k < a.factors.size(); ++k) {
      CHECK(a.factors[k].factor == b.factors[k].factor);
      CHECK(a.factors[k].multiplicity == b.factors[k].multiplicity);
    }
  }
}

TEST_CASE("constants and zero") {
  const FieldOrder F(7);
  const auto fac = factor(Poly::constant(F, 4), 0);
  CHECK(fac.factors.empty());
  CHECK(fac.unit.value() == 4u);
  CHECK_THROWS_AS(factor(Poly(F), 0), Error);
}
