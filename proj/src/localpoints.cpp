#include "hasse/localpoints.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>

#include "hasse/residue.hpp"

namespace hasse {

namespace {

// Irreducibles of a given degree, computed once per (q, degree) and shared by
// every quaternion algebra examined in the process.
const std::vector<MonicIrreducible>& irreducibles_of_degree(FieldOrder order, int degree) {
  static std::mutex mutex;
  static std::map<std::pair<std::uint32_t, int>, std::unique_ptr<std::vector<MonicIrreducible>>> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto& slot = cache[{order.value(), degree}];
  if (!slot) {
    slot = std::make_unique<std::vector<MonicIrreducible>>(enumerate_monic_irreducibles(order, degree));
  }
  return *slot;
}

// Quadratic character of F_r = A/(r) as a lookup table indexed by the
// base-q value of a reduced residue. Falls back to residue_symbol when |r| is
// too large to tabulate.
class CharacterTable {
 public:
  static constexpr std::uint64_t kMaxSize = 1u << 20;

  explicit CharacterTable(const MonicIrreducible& r) : r_(r) {
    std::uint64_t size = 1;
    for (int i = 0; i < r.degree() && size <= kMaxSize; ++i) size *= r.order().value();
    if (size > kMaxSize) return;
    chi_.assign(size, -1);
    chi_[0] = 0;
    const std::uint32_t q = r.order().value();
    std::vector<Poly::Coeff> digits(static_cast<std::size_t>(r.degree()));
    for (std::uint64_t idx = 1; idx < size; ++idx) {
      std::uint64_t x = idx;
      for (auto& d : digits) {
        d = static_cast<Poly::Coeff>(x % q);
        x /= q;
      }
      const Poly sq = square(Poly(r.order(), digits)) % r.poly();
      chi_[index(sq)] = 1;
    }
  }

  const MonicIrreducible& prime() const noexcept { return r_; }

  /// Symbol of an already reduced residue.
  int reduced_symbol(const Poly& residue) const {
    if (residue.is_zero()) return 0;
    if (chi_.empty()) return residue_symbol(residue, r_);
    return chi_[index(residue)];
  }

  int symbol(const Poly& a) const { return reduced_symbol(a % r_.poly()); }

 private:
  std::uint64_t index(const Poly& residue) const {
    std::uint64_t idx = 0;
    const auto c = residue.coeffs();
    for (std::size_t i = c.size(); i-- > 0;) idx = idx * r_.order().value() + c[i];
    return idx;
  }

  MonicIrreducible r_;
  std::vector<std::int8_t> chi_;
};

// Shared state for witness searches against one quaternion algebra: the two
// character tables and the candidate a's with their squares, in canonical order.
class WitnessKernel {
 public:
  WitnessKernel(const QuaternionData& d, int max_a_degree)
      : d_(d), chi1_(d.ram1()), chi2_(d.ram2()) {
    for (auto& a : polys_up_to(d.order(), max_a_degree)) {
      Poly a2 = square(a);
      candidates_.push_back({std::move(a), std::move(a2)});
    }
  }

  bool holds(const MonicIrreducible& l, const Poly& a_squared, Scalar c) const {
    const Poly disc = a_squared - l.poly() * (c * Scalar(c.order(), 4));
    if (!nonsquare_at_infinity(disc)) return false;
    return locally_nonsplit(disc, chi1_) && locally_nonsplit(disc, chi2_);
  }

  std::optional<LocalWitness> search(const MonicIrreducible& l) const {
    const int max_deg = l.degree() / 2;
    for (std::uint32_t cv = 1; cv < d_.order().value(); ++cv) {
      const Scalar c(d_.order(), cv);
      for (const auto& cand : candidates_) {
        if (cand.a.degree() > max_deg) break;
        if (holds(l, cand.a_squared, c)) return LocalWitness{l, cand.a, c};
      }
    }
    return std::nullopt;
  }

 private:
  struct Candidate {
    Poly a;
    Poly a_squared;
  };

  static bool locally_nonsplit(const Poly& disc, const CharacterTable& chi) {
    const int s = chi.symbol(disc);
    if (s == -1) return true;
    if (s == 1) return false;
    return valuation(disc, chi.prime()) % 2 == 1;
  }

  const QuaternionData& d_;
  CharacterTable chi1_, chi2_;
  std::vector<Candidate> candidates_;
};

// For each b coprime to pq with deg b <= deg p + deg q - 1, the least degree of
// an a (deg a <= limit) with both symbols of a^2 - b equal to -1; returns the
// maximum of these (at least 0), or nothing if some b has no such a.
std::optional<int> required_a_degree(const QuaternionData& d, int limit) {
  if (limit < 0) return std::nullopt;
  const CharacterTable chi1(d.ram1()), chi2(d.ram2());
  const Poly& p1 = d.ram1().poly();
  const Poly& p2 = d.ram2().poly();

  struct Square {
    int degree;
    Poly mod1, mod2;
  };
  std::vector<Square> squares;
  for (const auto& a : polys_up_to(d.order(), limit)) {
    const Poly a2 = square(a);
    squares.push_back({a.degree(), a2 % p1, a2 % p2});
  }

  int worst = 0;
  const int b_degree = d.ram1().degree() + d.ram2().degree() - 1;
  for (const auto& b : polys_up_to(d.order(), b_degree)) {
    const Poly b1 = b % p1, b2 = b % p2;
    if (b1.is_zero() || b2.is_zero()) continue;
    std::optional<int> found;
    for (const auto& s : squares) {
      if (chi1.reduced_symbol(s.mod1 - b1) == -1 && chi2.reduced_symbol(s.mod2 - b2) == -1) {
        found = s.degree;
        break;
      }
    }
    if (!found) return std::nullopt;
    worst = std::max(worst, *found);
  }
  return worst;
}

void require_unramified_place(const QuaternionData& d, const MonicIrreducible& l) {
  if (d.is_ramified_at(l)) {
    throw Error(ErrorKind::InvalidInput,
                "l = " + format_poly(l.poly()) + " is a ramified prime of D");
  }
}

}  // namespace

bool local_infinity(const QuaternionData& d, const QuadraticField& k) {
  if (infinity_behavior(k) != SplitType::Split) return true;
  return d.ram1().degree() % 2 == 1 && d.ram2().degree() % 2 == 1;
}

std::optional<Scalar> ramified_mu(const MonicIrreducible& r, const MonicIrreducible& other) {
  for (Scalar mu : square_class_reps(r.order())) {
    const QuadraticField k(mu, r.poly());
    if (place_behavior(other, k) != SplitType::Split && infinity_behavior(k) != SplitType::Split) {
      return mu;
    }
  }
  return std::nullopt;
}

RamifiedCheck local_ramified_prime(const QuaternionData& d, const QuadraticField& k, Ramified which) {
  const MonicIrreducible& r = which == Ramified::First ? d.ram1() : d.ram2();
  const MonicIrreducible& s = which == Ramified::First ? d.ram2() : d.ram1();
  const SplitType behavior = place_behavior(r, k);
  switch (behavior) {
    case SplitType::Inert:
      return {behavior, true, std::nullopt};
    case SplitType::Ramified: {
      auto mu = ramified_mu(r, s);
      return {behavior, mu.has_value(), mu};
    }
    case SplitType::Split:
      break;
  }
  return {behavior, false, std::nullopt};
}

int lambda_cutoff(const QuaternionData& d) {
  return 2 * (d.ram1().degree() + d.ram2().degree()) - 2;
}

std::vector<MonicIrreducible> lambda_set(const QuaternionData& d, int max_degree) {
  std::vector<MonicIrreducible> out;
  for (int deg = 1; deg <= max_degree; ++deg) {
    for (const auto& l : irreducibles_of_degree(d.order(), deg)) {
      if (!d.is_ramified_at(l)) out.push_back(l);
    }
  }
  return out;
}

std::vector<MonicIrreducible> lambda_set(const QuaternionData& d) {
  return lambda_set(d, lambda_cutoff(d));
}

bool witness_holds(const QuaternionData& d, const LocalWitness& w) {
  require_same_field(w.a, d.ram1().poly());
  if (d.is_ramified_at(w.l) || w.c.is_zero()) return false;
  if (2 * w.a.degree() > w.l.degree()) return false;
  const Poly disc = square(w.a) - w.l.poly() * (w.c * Scalar(w.c.order(), 4));
  if (!nonsquare_at_infinity(disc)) return false;
  for (const auto* r : {&d.ram1(), &d.ram2()}) {
    const int s = residue_symbol(disc, *r);
    if (s == -1) continue;
    if (s == 0 && valuation(disc, *r) % 2 == 1) continue;
    return false;
  }
  return true;
}

std::optional<LocalWitness> witness_search(const QuaternionData& d, const MonicIrreducible& l) {
  require_unramified_place(d, l);
  return WitnessKernel(d, l.degree() / 2).search(l);
}

std::vector<std::optional<LocalWitness>> search_witnesses(const QuaternionData& d,
                                                          const std::vector<MonicIrreducible>& places,
                                                          Exec exec) {
  int max_degree = 0;
  for (const auto& l : places) {
    require_unramified_place(d, l);
    max_degree = std::max(max_degree, l.degree());
  }
  const WitnessKernel kernel(d, max_degree / 2);
  std::vector<std::optional<LocalWitness>> out(places.size());
  for_each_index(places.size(), exec, [&](std::size_t i) { out[i] = kernel.search(places[i]); });
  return out;
}

bool fast_bound_holds(const QuaternionData& d, int m) {
  const int upper = d.ram1().degree() + d.ram2().degree() - 2;
  if (m < 0 || m > upper) return false;
  return required_a_degree(d, m).has_value();
}

std::optional<int> fast_m_bound(const QuaternionData& d) {
  return required_a_degree(d, d.ram1().degree() + d.ram2().degree() - 2);
}

LocalReport local_all(const QuaternionData& d, const QuadraticField& k, Exec exec) {
  if (!field_splits_quaternion(k, d)) {
    throw Error(ErrorKind::InvalidInput, "K does not split D: a ramified prime of D splits in K");
  }
  LocalReport report;
  report.infinity = infinity_behavior(k);
  report.infinity_ok = report.infinity != SplitType::Split;
  report.ram1 = local_ramified_prime(d, k, Ramified::First);
  report.ram2 = local_ramified_prime(d, k, Ramified::Second);
  report.lambda_max_degree = lambda_cutoff(d);
  report.fast_m = fast_m_bound(d);
  report.explicit_max_degree =
      report.fast_m ? std::min(2 * *report.fast_m, report.lambda_max_degree) : report.lambda_max_degree;

  const auto places = lambda_set(d, report.explicit_max_degree);
  auto found = search_witnesses(d, places, exec);
  for (std::size_t i = 0; i < places.size(); ++i) {
    if (found[i]) {
      report.witnesses.push_back(std::move(*found[i]));
    } else {
      report.missing.push_back(places[i]);
    }
  }
  return report;
}

}  // namespace hasse
