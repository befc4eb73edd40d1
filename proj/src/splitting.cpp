#include "hasse/splitting.hpp"

#include "hasse/factor.hpp"
#include "hasse/residue.hpp"

namespace hasse {

const char* to_string(SplitType s) noexcept {
  switch (s) {
    case SplitType::Split: return "Split";
    case SplitType::Inert: return "Inert";
    case SplitType::Ramified: return "Ramified";
  }
  return "?";
}

QuadraticField::QuadraticField(Scalar eps, Poly radical) : eps_(eps), radical_(std::move(radical)) {
  require_same_field(Poly::constant(eps_), radical_);
  if (eps_.is_zero()) throw Error(ErrorKind::InvalidInput, "eps must be a unit");
  if (!radical_.is_monic() || radical_.degree() < 1) {
    throw Error(ErrorKind::InvalidInput, "radical must be monic and non-constant");
  }
  if (!is_squarefree(radical_)) {
    throw Error(ErrorKind::InvalidInput, "radical '" + format_poly(radical_) + "' is not square-free");
  }
}

QuaternionData::QuaternionData(MonicIrreducible ram1, MonicIrreducible ram2)
    : ram1_(std::move(ram1)), ram2_(std::move(ram2)) {
  require_same_field(ram1_.poly(), ram2_.poly());
  if (ram1_ == ram2_) throw Error(ErrorKind::InvalidInput, "ramified primes must be distinct");
}

SplitType place_behavior(const MonicIrreducible& l, const QuadraticField& k) {
  if ((k.radical() % l.poly()).is_zero()) return SplitType::Ramified;
  return residue_symbol(k.radicand(), l) == 1 ? SplitType::Split : SplitType::Inert;
}

SplitType infinity_behavior(const QuadraticField& k) {
  const Poly d = k.radicand();
  if (d.degree() % 2 != 0) return SplitType::Ramified;
  return is_square(d.lead()) ? SplitType::Split : SplitType::Inert;
}

bool field_splits_quaternion(const QuadraticField& k, const QuaternionData& d) {
  return place_behavior(d.ram1(), k) != SplitType::Split &&
         place_behavior(d.ram2(), k) != SplitType::Split;
}

static void require_unramified(const QuaternionData& d, const MonicIrreducible& y) {
  if (d.is_ramified_at(y)) {
    throw Error(ErrorKind::InvalidInput, "y must not be a ramified prime of D (y = " +
                                             format_poly(y.poly()) + ")");
  }
}

std::vector<MuSymbols> mu_y_symbols(const QuaternionData& d, const MonicIrreducible& y) {
  require_unramified(d, y);
  std::vector<MuSymbols> out;
  for (Scalar mu : square_class_reps(y.order())) {
    const Poly muy = y.poly() * mu;
    out.push_back({mu, residue_symbol(muy, d.ram1()), residue_symbol(muy, d.ram2())});
  }
  return out;
}

bool mu_y_obstruction(const QuaternionData& d, const MonicIrreducible& y) {
  for (const auto& s : mu_y_symbols(d, y)) {
    if (s.ram1 != 1 && s.ram2 != 1) return false;
  }
  return true;
}

std::optional<std::string> CriterionReport::excluded_prime() const {
  if (ram1_excluded) return "ram1";
  if (ram2_excluded) return "ram2";
  return std::nullopt;
}

CriterionReport nonexistence_criterion(const QuaternionData& d, const MonicIrreducible& y,
                                       const QuadraticField& k, const ExclusionTable& table) {
  require_unramified(d, y);
  if (!(table.y() == y)) throw Error(ErrorKind::InvalidInput, "exclusion table built for another y");

  CriterionReport r;
  r.field_splits = field_splits_quaternion(k, d);
  r.y_ramified = place_behavior(y, k) == SplitType::Ramified;
  r.ram1_excluded = table.excludes(d.ram1());
  r.ram2_excluded = table.excludes(d.ram2());
  r.mu_symbols = mu_y_symbols(d, y);
  r.mu_obstruction = true;
  for (const auto& s : r.mu_symbols) {
    if (s.ram1 != 1 && s.ram2 != 1) r.mu_obstruction = false;
  }

  if (!r.field_splits) r.reasons.emplace_back("K does not split D");
  if (!r.y_ramified) r.reasons.emplace_back("y is not ramified in K");
  if (!r.ram1_excluded && !r.ram2_excluded) r.reasons.emplace_back("both ramified primes lie in P(y)");
  if (!r.mu_obstruction) r.reasons.emplace_back("F(sqrt(mu*y)) splits D for some mu");
  r.holds = r.reasons.empty();
  return r;
}

CriterionReport nonexistence_criterion(const QuaternionData& d, const MonicIrreducible& y,
                                       const QuadraticField& k) {
  require_unramified(d, y);
  return nonexistence_criterion(d, y, k, ExclusionTable(y));
}

}  // namespace hasse
