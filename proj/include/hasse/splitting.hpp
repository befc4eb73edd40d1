#pragma once

// Splitting of places of F = F_q(t) in quadratic extensions F(sqrt(eps*rad)),
// quaternion splitting, and the criterion for X^D(K) to be empty (d = 2).

#include <optional>
#include <string>
#include <vector>

#include "hasse/irreducible.hpp"
#include "hasse/weil.hpp"

namespace hasse {

enum class SplitType { Split, Inert, Ramified };

const char* to_string(SplitType s) noexcept;

/// K = F(sqrt(eps * radical)), radical monic, square-free and non-constant.
class QuadraticField {
 public:
  QuadraticField(Scalar eps, Poly radical);

  Scalar eps() const noexcept { return eps_; }
  const Poly& radical() const noexcept { return radical_; }
  /// eps * radical.
  Poly radicand() const { return radical_ * eps_; }
  FieldOrder order() const noexcept { return radical_.order(); }

 private:
  Scalar eps_;
  Poly radical_;
};

/// Quaternion division algebra over F ramified exactly at {ram1, ram2}.
class QuaternionData {
 public:
  QuaternionData(MonicIrreducible ram1, MonicIrreducible ram2);

  const MonicIrreducible& ram1() const noexcept { return ram1_; }
  const MonicIrreducible& ram2() const noexcept { return ram2_; }
  FieldOrder order() const noexcept { return ram1_.order(); }
  bool is_ramified_at(const MonicIrreducible& p) const { return p == ram1_ || p == ram2_; }

 private:
  MonicIrreducible ram1_, ram2_;
};

SplitType place_behavior(const MonicIrreducible& l, const QuadraticField& k);
SplitType infinity_behavior(const QuadraticField& k);

/// Neither ramified prime of D splits in K.
bool field_splits_quaternion(const QuadraticField& k, const QuaternionData& d);

struct MuSymbols {
  Scalar mu;
  int ram1;  // (mu*y / ram1)
  int ram2;  // (mu*y / ram2)
};

/// Symbols (mu*y / r) for each square-class representative mu.
std::vector<MuSymbols> mu_y_symbols(const QuaternionData& d, const MonicIrreducible& y);

/// For every mu, F(sqrt(mu*y)) fails to split D: some ramified prime splits.
bool mu_y_obstruction(const QuaternionData& d, const MonicIrreducible& y);

struct CriterionReport {
  bool field_splits = false;
  bool y_ramified = false;
  bool ram1_excluded = false;
  bool ram2_excluded = false;
  bool mu_obstruction = false;
  std::vector<MuSymbols> mu_symbols;
  bool holds = false;
  /// Failing hypotheses in the order they are stated; empty when holds.
  std::vector<std::string> reasons;

  /// "ram1" or "ram2" when one of them lies outside P(y).
  std::optional<std::string> excluded_prime() const;
};

/// All four hypotheses of the emptiness criterion for X^D(K).
/// Throws InvalidInput when y is a ramified prime of D.
CriterionReport nonexistence_criterion(const QuaternionData& d, const MonicIrreducible& y,
                                       const QuadraticField& k, const ExclusionTable& table);
CriterionReport nonexistence_criterion(const QuaternionData& d, const MonicIrreducible& y,
                                       const QuadraticField& k);

}  // namespace hasse
