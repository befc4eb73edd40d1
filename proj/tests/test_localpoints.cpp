#include "doctest.h"

#include <algorithm>

#include "hasse/localpoints.hpp"
#include "hasse/residue.hpp"
#include "oracle.hpp"

using namespace hasse;

namespace {

MonicIrreducible prime(const char* text, std::uint32_t q) { return MonicIrreducible(parse_poly(text, FieldOrder(q))); }

// Polynomials of degree < n sorted by degree, then lexicographically from the constant term.
std::vector<oracle::Vec> canonical_residues(std::int64_t q, int n) {
  auto all = oracle::residues(q, n);
  std::sort(all.begin(), all.end(), [](const oracle::Vec& a, const oracle::Vec& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return all;
}

struct Brute {
  std::int64_t q;
  oracle::Vec p, r;
  std::set<oracle::Vec> sp, sr;
  std::set<std::int64_t> units;

  Brute(const QuaternionData& d)
      : q(d.order().value()), p(oracle::from(d.ram1().poly())), r(oracle::from(d.ram2().poly())),
        sp(oracle::squares_mod(p, q)), sr(oracle::squares_mod(r, q)) {
    for (std::int64_t x = 1; x < q; ++x) units.insert(x * x % q);
  }

  bool nonsplit_at(const oracle::Vec& disc, const oracle::Vec& prime, const std::set<oracle::Vec>& squares) const {
    const int s = oracle::symbol(disc, prime, q, squares);
    if (s != 0) return s == -1;
    int v = 0;
    oracle::Vec f = disc;
    while (oracle::rem(f, prime, q).empty()) {
      f = oracle::divmod(f, prime, q).first;
      ++v;
    }
    return v % 2 == 1;
  }

  bool holds(const oracle::Vec& l, const oracle::Vec& a, std::int64_t c) const {
    const auto disc = oracle::sub(oracle::mul(a, a, q), oracle::mul({4 * c}, l, q), q);
    const bool inf_ok = (disc.size() - 1) % 2 == 1 || !units.count(disc.back());
    return inf_ok && nonsplit_at(disc, p, sp) && nonsplit_at(disc, r, sr);
  }

  std::optional<std::pair<oracle::Vec, std::int64_t>> first_witness(const oracle::Vec& l) const {
    const int max_deg = (static_cast<int>(l.size()) - 1) / 2;
    for (std::int64_t c = 1; c < q; ++c) {
      for (const auto& a : canonical_residues(q, max_deg + 1)) {
        if (holds(l, a, c)) return std::pair{a, c};
      }
    }
    return std::nullopt;
  }

  std::optional<int> fast_m() const {
    const int dp = static_cast<int>(p.size()) - 1, dr = static_cast<int>(r.size()) - 1;
    for (int m = 0; m <= dp + dr - 2; ++m) {
      bool all = true;
      const auto as = oracle::residues(q, m + 1);
      for (const auto& b : oracle::residues(q, dp + dr)) {
        if (oracle::rem(b, p, q).empty() || oracle::rem(b, r, q).empty()) continue;
        bool found = false;
        for (const auto& a : as) {
          const auto x = oracle::sub(oracle::mul(a, a, q), b, q);
          if (oracle::symbol(x, p, q, sp) == -1 && oracle::symbol(x, r, q, sr) == -1) {
            found = true;
            break;
          }
        }
        if (!found) {
          all = false;
          break;
        }
      }
      if (all) return m;
    }
    return std::nullopt;
  }
};

}  // namespace

TEST_CASE("Lambda excludes the ramified primes and stops at the cutoff") {
  const QuaternionData d(prime("t^3+t^2+t+2", 3), prime("t+1", 3));
  CHECK(lambda_cutoff(d) == 6);
  const auto places = lambda_set(d);
  std::size_t expected = 0;
  for (int n = 1; n <= 6; ++n) expected += static_cast<std::size_t>(oracle::gauss(3, n));
  CHECK(places.size() == expected - 2);
  for (const auto& l : places) CHECK_FALSE(d.is_ramified_at(l));
  for (std::size_t i = 1; i < places.size(); ++i) CHECK(canonical_less(places[i - 1], places[i]));
}

TEST_CASE("witness search returns the first witness in canonical order") {
  struct Pair {
    std::uint32_t q;
    const char* p;
    const char* r;
  };
  for (const Pair& pr : {Pair{3, "t^3+t^2+t+2", "t+1"}, Pair{3, "t^2+1", "t+2"}, Pair{3, "t", "t^3+2*t^2+t+1"},
                         Pair{5, "t^2+2", "t+1"}, Pair{7, "t", "t+3"}}) {
    const QuaternionData d(prime(pr.p, pr.q), prime(pr.r, pr.q));
    const Brute brute(d);
    for (const auto& l : lambda_set(d, 4)) {
      const auto got = witness_search(d, l);
      const auto want = brute.first_witness(oracle::from(l.poly()));
      REQUIRE(got.has_value() == want.has_value());
      if (!got) continue;
      CHECK(got->a == oracle::to(want->first, pr.q));
      CHECK(got->c.value() == static_cast<std::uint32_t>(want->second));
      CHECK(witness_holds(d, *got));
    }
    CHECK_THROWS_AS(witness_search(d, d.ram1()), Error);
  }
}

TEST_CASE("the witness predicate rejects out-of-range data") {
  const std::uint32_t q = 3;
  const FieldOrder F(q);
  const QuaternionData d(prime("t^3+t^2+t+2", q), prime("t+1", q));
  const MonicIrreducible l = prime("t", q);
  const auto w = witness_search(d, l);
  REQUIRE(w);
  CHECK_FALSE(witness_holds(d, {l, w->a, Scalar(F, 0)}));
  CHECK_FALSE(witness_holds(d, {l, parse_poly("t", F), w->c}));
  CHECK_FALSE(witness_holds(d, {d.ram2(), w->a, w->c}));
}

TEST_CASE("fast bound agrees with brute force") {
  struct Pair {
    std::uint32_t q;
    const char* p;
    const char* r;
  };
  for (const Pair& pr : {Pair{3, "t^3+t^2+t+2", "t+1"}, Pair{3, "t^2+1", "t+2"}, Pair{3, "t", "t^3+2*t^2+t+1"},
                         Pair{3, "t^2+1", "t^2+t+2"}, Pair{5, "t^2+2", "t+1"}, Pair{7, "t^3+2", "t+3"}}) {
    const QuaternionData d(prime(pr.p, pr.q), prime(pr.r, pr.q));
    const auto m = fast_m_bound(d);
    CHECK(m == Brute(d).fast_m());
    if (m) {
      CHECK(fast_bound_holds(d, *m));
      if (*m > 0) CHECK_FALSE(fast_bound_holds(d, *m - 1));
    }
    CHECK_FALSE(fast_bound_holds(d, -1));
  }
}

TEST_CASE("an algebra with a place lacking a witness") {
  const std::uint32_t q = 3;
  const FieldOrder F(q);
  const QuaternionData d(prime("t", q), prime("t^3+2*t^2+t+1", q));
  const MonicIrreducible l = prime("t+1", q);
  CHECK_FALSE(witness_search(d, l).has_value());
  CHECK_FALSE(Brute(d).first_witness(oracle::from(l.poly())).has_value());

  const QuadraticField k(Scalar(F, 1), prime("t+2", q).poly() * d.ram1().poly() * d.ram2().poly());
  const auto report = local_all(d, k);
  CHECK(std::find(report.missing.begin(), report.missing.end(), l) != report.missing.end());
  CHECK_FALSE(report.ok());
}

TEST_CASE("local checks for a tabulated algebra") {
  const std::uint32_t q = 3;
  const FieldOrder F(q);
  const QuaternionData d(prime("t^3+t^2+t+2", q), prime("t+1", q));
  const QuadraticField k(Scalar(F, 1), Poly::t(F) * d.ram1().poly() * d.ram2().poly());
  const auto report = local_all(d, k);
  CHECK(report.ok());
  CHECK(report.infinity == SplitType::Ramified);
  CHECK(report.ram1.behavior == SplitType::Ramified);
  CHECK(report.ram1.mu.has_value());
  CHECK(report.lambda_max_degree == 6);
  REQUIRE(report.fast_m.has_value());
  CHECK(report.explicit_max_degree == std::min(2 * *report.fast_m, 6));
  CHECK(report.witnesses.size() == lambda_set(d, report.explicit_max_degree).size());
  for (const auto& w : report.witnesses) CHECK(witness_holds(d, w));
  CHECK(local_infinity(d, k));
}

TEST_CASE("infinity split with a ramified prime of even degree") {
  const std::uint32_t q = 3;
  const FieldOrder F(q);
  const QuaternionData d(prime("t^3+t^2+t+2", q), prime("t^2+1", q));
  const QuadraticField k(Scalar(F, 1), Poly::t(F) * d.ram1().poly() * d.ram2().poly());
  REQUIRE(infinity_behavior(k) == SplitType::Split);
  CHECK_FALSE(local_infinity(d, k));
  CHECK_FALSE(local_all(d, k).infinity_ok);
  CHECK_FALSE(local_all(d, k).ok());
}

TEST_CASE("ramified primes") {
  const std::uint32_t q = 3;
  const FieldOrder F(q);
  const QuaternionData d(prime("t", q), prime("t+1", q));
  const QuadraticField splits_t(Scalar(F, 1), prime("t+1", q).poly());
  const auto split = local_ramified_prime(d, splits_t, Ramified::First);
  CHECK(split.behavior == SplitType::Split);
  CHECK_FALSE(split.ok);
  CHECK_THROWS_AS(local_all(d, splits_t), Error);

  const QuadraticField inert_t(Scalar(F, 1), prime("t+2", q).poly() * prime("t+1", q).poly());
  CHECK(local_ramified_prime(d, inert_t, Ramified::First).behavior == SplitType::Inert);
  CHECK(local_ramified_prime(d, inert_t, Ramified::First).ok);

  const QuaternionData d7(prime("t^3+2", 7), prime("t+3", 7));
  for (auto [r, s] : {std::pair{d7.ram1(), d7.ram2()}, std::pair{d7.ram2(), d7.ram1()}}) {
    const auto mu = ramified_mu(r, s);
    REQUIRE(mu);
    const QuadraticField k(*mu, r.poly());
    CHECK(place_behavior(s, k) != SplitType::Split);
    CHECK(infinity_behavior(k) != SplitType::Split);
  }
}

TEST_CASE("serial and parallel local reports agree") {
  const std::uint32_t q = 5;
  const FieldOrder F(q);
  const QuaternionData d(prime("t^4+2", q), prime("t^2+t+1", q));
  const QuadraticField k(Scalar(F, 1), Poly::t(F) * d.ram1().poly() * d.ram2().poly());
  const auto a = local_all(d, k, Exec::Serial), b = local_all(d, k, Exec::Parallel);
  REQUIRE(a.witnesses.size() == b.witnesses.size());
  for (std::size_t i = 0; i < a.witnesses.size(); ++i) {
    CHECK(a.witnesses[i].l == b.witnesses[i].l);
    CHECK(a.witnesses[i].a == b.witnesses[i].a);
    CHECK(a.witnesses[i].c == b.witnesses[i].c);
  }
  CHECK(a.missing.size() == b.missing.size());
  CHECK(a.fast_m == b.fast_m);
}
