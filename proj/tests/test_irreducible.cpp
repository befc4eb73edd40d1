#include "doctest.h"

#include <random>

#include "hasse/irreducible.hpp"
#include "hasse/residue.hpp"
#include "oracle.hpp"

using namespace hasse;

TEST_CASE("irreducibility agrees with trial division") {
  for (auto [q, max_deg] : {std::pair{3, 6}, std::pair{5, 4}, std::pair{7, 3}}) {
    for (int n = 1; n <= max_deg; ++n) {
      for (const auto& f : oracle::monics(q, n)) {
        CHECK(is_irreducible(oracle::to(f, q)) == oracle::irreducible(f, q));
      }
    }
  }
  const FieldOrder F(5);
  CHECK(is_irreducible(parse_poly("3*t^2+3", F)) == is_irreducible(parse_poly("t^2+1", F)));
  CHECK_THROWS_AS(is_irreducible(Poly::constant(F, 2)), Error);
}

TEST_CASE("counts of monic irreducibles follow Gauss's formula") {
  for (std::uint32_t q : {3u, 5u}) {
    for (int n = 1; n <= 8; ++n) {
      CHECK(gauss_count(FieldOrder(q), n) == static_cast<std::uint64_t>(oracle::gauss(q, n)));
      CHECK(enumerate_monic_irreducibles(FieldOrder(q), n).size() == static_cast<std::size_t>(oracle::gauss(q, n)));
    }
  }
  for (int n = 1; n <= 4; ++n) {
    std::size_t brute = 0;
    for (const auto& f : oracle::monics(3, n)) brute += oracle::irreducible(f, 3);
    CHECK(brute == static_cast<std::size_t>(oracle::gauss(3, n)));
  }
  CHECK(gauss_count(FieldOrder(3), 1) == 3);
  CHECK(gauss_count(FieldOrder(3), 2) == 3);
  CHECK(gauss_count(FieldOrder(3), 3) == 8);
}

TEST_CASE("enumeration is canonical and stops on request") {
  const FieldOrder F(3);
  const auto deg2 = enumerate_monic_irreducibles(F, 2);
  REQUIRE(deg2.size() == 3);
  CHECK(deg2[0].poly() == parse_poly("t^2+1", F));
  CHECK(deg2[1].poly() == parse_poly("t^2+t+2", F));
  CHECK(deg2[2].poly() == parse_poly("t^2+2*t+2", F));
  const auto deg1 = enumerate_monic_irreducibles(F, 1);
  CHECK(deg1[0].poly() == parse_poly("t", F));
  CHECK(deg1[1].poly() == parse_poly("t+1", F));
  CHECK(deg1[2].poly() == parse_poly("t+2", F));

  int seen = 0;
  for_each_monic_irreducible(F, 3, [&](const MonicIrreducible&) { return ++seen < 3; });
  CHECK(seen == 3);
}

TEST_CASE("MonicIrreducible validates its input") {
  const FieldOrder F(3);
  CHECK_NOTHROW(MonicIrreducible(parse_poly("t^3+t^2+t+2", F)));
  CHECK_THROWS_AS(MonicIrreducible(parse_poly("t^2+2", F)), Error);
  CHECK_THROWS_AS(MonicIrreducible(parse_poly("2*t+1", F)), Error);
  CHECK_THROWS_AS(MonicIrreducible(Poly::constant(F, 1)), Error);
}

TEST_CASE("residue symbol agrees with exhaustive squares") {
  for (std::uint32_t q : {3u, 5u}) {
    for (int n = 1; n <= 3; ++n) {
      for (const auto& p : oracle::monics(q, n)) {
        if (!oracle::irreducible(p, q)) continue;
        const MonicIrreducible P(oracle::to(p, q));
        const auto squares = oracle::squares_mod(p, q);
        std::size_t field_size = 1;
        for (int i = 0; i < n; ++i) field_size *= q;
        CHECK(squares.size() == (field_size - 1) / 2);
        for (const auto& a : oracle::residues(q, n)) {
          CHECK(residue_symbol(oracle::to(a, q), P) == oracle::symbol(a, p, q, squares));
        }
      }
    }
  }
}

TEST_CASE("residue symbol goldens") {
  const FieldOrder F(3);
  const MonicIrreducible p(parse_poly("t^3+t^2+t+2", F));
  const MonicIrreducible q(parse_poly("t+1", F));
  CHECK(residue_symbol(q.poly(), p) == -1);
  CHECK(residue_symbol(-p.poly(), q) == -1);
  CHECK(residue_symbol(p.poly() * Poly::t(F), p) == 0);
}

namespace {

MonicIrreducible random_irreducible(std::mt19937_64& rng, std::uint32_t q, int max_degree) {
  std::uniform_int_distribution<int> deg(1, max_degree);
  std::uniform_int_distribution<std::int64_t> coeff(0, q - 1);
  while (true) {
    oracle::Vec v(static_cast<std::size_t>(deg(rng)) + 1);
    for (auto& c : v) c = coeff(rng);
    v.back() = 1;
    const Poly f = oracle::to(v, q);
    if (is_irreducible(f)) return MonicIrreducible::trusted(f);
  }
}

}  // namespace

TEST_CASE("quadratic reciprocity on random pairs") {
  std::mt19937_64 rng(23);
  int checked = 0;
  for (std::uint32_t q : {3u, 5u, 7u, 11u}) {
    for (int i = 0; i < 125; ++i) {
      const auto a = random_irreducible(rng, q, 7);
      auto b = random_irreducible(rng, q, 7);
      while (b == a) b = random_irreducible(rng, q, 7);
      const int sign = ((q - 1) / 2 * a.degree() * b.degree()) % 2 ? -1 : 1;
      CHECK(residue_symbol(a.poly(), b) * residue_symbol(b.poly(), a) == sign);
      ++checked;
    }
  }
  CHECK(checked == 500);
}

TEST_CASE("residue symbol is multiplicative") {
  std::mt19937_64 rng(29);
  const std::uint32_t q = 5;
  const MonicIrreducible p(parse_poly("t^3+t+1", FieldOrder(q)));
  for (int i = 0; i < 200; ++i) {
    const Poly a = oracle::to(oracle::random_poly(rng, q, 8), q);
    const Poly b = oracle::to(oracle::random_poly(rng, q, 8), q);
    CHECK(residue_symbol(a * b, p) == residue_symbol(a, p) * residue_symbol(b, p));
  }
}

TEST_CASE("valuation") {
  const FieldOrder F(3);
  const MonicIrreducible p(parse_poly("t+1", F));
  const Poly f = parse_poly("t^2+1", F);
  CHECK(valuation(f, p) == 0);
  CHECK(valuation(f * p.poly() * p.poly() * p.poly(), p) == 3);
  CHECK_THROWS_AS(valuation(Poly(F), p), Error);
}

TEST_CASE("frobenius") {
  const FieldOrder F(3);
  const Poly m = parse_poly("t^3+t^2+t+2", F);
  Poly x = Poly::t(F);
  for (int i = 0; i < 3; ++i) x = frobenius(x, m);
  CHECK(x == Poly::t(F));
  CHECK(frobenius(Poly::t(F), m) == powmod(Poly::t(F), 3, m));
}
