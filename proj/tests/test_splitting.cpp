#include "doctest.h"

#include "hasse/certificate.hpp"
#include "hasse/factor.hpp"
#include "hasse/splitting.hpp"
#include "oracle.hpp"

using namespace hasse;

namespace {

MonicIrreducible prime(const char* text, std::uint32_t q) { return MonicIrreducible(parse_poly(text, FieldOrder(q))); }

}  // namespace

TEST_CASE("QuadraticField validates the radical") {
  const FieldOrder F(3);
  CHECK_NOTHROW(QuadraticField(Scalar(F, 2), parse_poly("t^2+t", F)));
  CHECK_THROWS_AS(QuadraticField(Scalar(F, 0), Poly::t(F)), Error);
  CHECK_THROWS_AS(QuadraticField(Scalar(F, 1), Poly::constant(F, 1)), Error);
  CHECK_THROWS_AS(QuadraticField(Scalar(F, 1), parse_poly("2*t+1", F)), Error);
  CHECK_THROWS_AS(QuadraticField(Scalar(F, 1), parse_poly("t^2", F)), Error);
  CHECK(QuadraticField(Scalar(F, 2), Poly::t(F)).radicand() == parse_poly("2*t", F));
  CHECK_THROWS_AS(QuaternionData(prime("t", 3), prime("t", 3)), Error);
}

TEST_CASE("finite places split according to the square classes mod l") {
  for (std::uint32_t q : {3u, 5u}) {
    const FieldOrder F(q);
    std::vector<MonicIrreducible> places;
    for (int n = 1; n <= 2; ++n) {
      for (auto& l : enumerate_monic_irreducibles(F, n)) places.push_back(l);
    }
    for (const auto& r1 : places) {
      for (const auto& r2 : places) {
        if (!canonical_less(r1, r2)) continue;
        const Poly rad = r1.poly() * r2.poly();
        for (std::uint32_t e = 1; e < q; ++e) {
          const QuadraticField k(Scalar(F, e), rad);
          for (const auto& l : places) {
            const auto lv = oracle::from(l.poly());
            const auto squares = oracle::squares_mod(lv, q);
            const int s = oracle::symbol(oracle::from(k.radicand()), lv, q, squares);
            const SplitType expected = s == 0 ? SplitType::Ramified : s == 1 ? SplitType::Split : SplitType::Inert;
            CHECK(place_behavior(l, k) == expected);
          }
        }
      }
    }
  }
}

TEST_CASE("behaviour at infinity") {
  const FieldOrder F(5);
  CHECK(infinity_behavior(QuadraticField(Scalar(F, 1), parse_poly("t^3+t+1", F))) == SplitType::Ramified);
  CHECK(infinity_behavior(QuadraticField(Scalar(F, 2), parse_poly("t^3+t+1", F))) == SplitType::Ramified);
  CHECK(infinity_behavior(QuadraticField(Scalar(F, 1), parse_poly("t^2+2", F))) == SplitType::Split);
  CHECK(infinity_behavior(QuadraticField(Scalar(F, 4), parse_poly("t^2+2", F))) == SplitType::Split);
  CHECK(infinity_behavior(QuadraticField(Scalar(F, 2), parse_poly("t^2+2", F))) == SplitType::Inert);
  CHECK(infinity_behavior(QuadraticField(Scalar(F, 3), parse_poly("t^2+2", F))) == SplitType::Inert);
  CHECK(std::string(to_string(SplitType::Inert)) == "Inert");
}

TEST_CASE("mu*y symbols for the tabulated algebras") {
  struct Row {
    std::uint32_t q;
    const char* p;
    const char* r;
  };
  for (const Row& row : {Row{3, "t^3+t^2+t+2", "t+1"}, Row{3, "t^4+t^3+2*t+1", "t^2+1"}, Row{3, "t^5+2*t+1", "t+2"},
                         Row{5, "t^3+t^2+4*t+1", "t+2"}, Row{5, "t^4+2", "t^2+t+1"}, Row{7, "t^3+2", "t+3"}}) {
    const QuaternionData d(prime(row.p, row.q), prime(row.r, row.q));
    const MonicIrreducible y = prime("t", row.q);
    CHECK(mu_y_obstruction(d, y));
    const auto symbols = mu_y_symbols(d, y);
    REQUIRE(symbols.size() == 2);
    CHECK(symbols[0].mu.value() == 1u);
  }
  const QuaternionData d(prime("t", 3), prime("t+1", 3));
  CHECK_THROWS_AS(mu_y_symbols(d, prime("t", 3)), Error);
}

TEST_CASE("criterion on a tabulated algebra") {
  const std::uint32_t q = 3;
  const FieldOrder F(q);
  const QuaternionData d(prime("t^3+t^2+t+2", q), prime("t+1", q));
  const MonicIrreducible y = prime("t", q);
  const QuadraticField k(Scalar(F, 1), y.poly() * d.ram1().poly() * d.ram2().poly());
  const auto r = nonexistence_criterion(d, y, k);
  CHECK(r.field_splits);
  CHECK(r.y_ramified);
  CHECK(r.ram1_excluded);
  CHECK_FALSE(r.ram2_excluded);
  CHECK(r.mu_obstruction);
  CHECK(r.holds);
  CHECK(r.reasons.empty());
  CHECK(r.excluded_prime() == std::optional<std::string>("ram1"));

  // The same algebra over a field in which y stays unramified.
  const QuadraticField k2(Scalar(F, 1), d.ram1().poly() * d.ram2().poly());
  const auto r2 = nonexistence_criterion(d, y, k2);
  CHECK_FALSE(r2.y_ramified);
  CHECK_FALSE(r2.holds);

  const QuaternionData bad(prime("t", q), prime("t+1", q));
  CHECK_THROWS_AS(nonexistence_criterion(bad, y, k), Error);
}

TEST_CASE("admissible eps keeps infinity non-split") {
  const FieldOrder F(5);
  const MonicIrreducible y = prime("t", 5);
  const QuaternionData odd(prime("t^3+t^2+4*t+1", 5), prime("t+2", 5));  // deg(y p q) = 5
  const QuaternionData other(prime("t^4+2", 5), prime("t^2+t+1", 5));  // deg(y p q) = 7
  for (const QuaternionData* d : {&odd, &other}) {
    for (const char* n_text : {"1", "t+1", "t^2+t+1", "t+3"}) {
      const Poly n = parse_poly(n_text, F);
      const Poly rad = y.poly() * d->ram1().poly() * d->ram2().poly() * n;
      if (!gcd(n, y.poly() * d->ram1().poly() * d->ram2().poly()).is_one() || !is_squarefree(rad)) continue;
      for (std::uint32_t e = 1; e < 5; ++e) {
        const Scalar eps(F, e);
        // deg(y p q) odd: every eps when deg n is even, the non-squares when deg n is odd.
        const bool expected = n.degree() % 2 == 0 || !is_square(eps);
        CHECK(eps_admissible(*d, y, n, eps) == expected);
        if (eps_admissible(*d, y, n, eps)) {
          CHECK(infinity_behavior(QuadraticField(eps, rad)) != SplitType::Split);
        }
      }
    }
  }
  CHECK(first_admissible_eps(odd, y, parse_poly("t+1", F)).value() == 2u);
  CHECK(first_admissible_eps(odd, y, Poly::constant(F, 1)).value() == 1u);
}
