#pragma once

// Hasse-principle certificates: construction, canonical JSON form, and
// re-verification from the recorded fields.

#include <cstdint>
#include <string>

#include "json.hpp"

#include "hasse/localpoints.hpp"
#include "hasse/splitting.hpp"
#include "hasse/weil.hpp"

namespace hasse {

struct HasseCertificate {
  static constexpr int kSchemaVersion = 1;

  std::uint32_t field_order;
  int d = 2;
  Poly y, ram1, ram2, n_poly;
  Scalar eps;
  Poly radicand;
  std::uint64_t exponent_n;
  std::uint64_t seed;
  CriterionReport criterion;
  LocalReport local;
  bool valid = false;
  std::string reason;
};

/// Whether infinity stays non-split in F(sqrt(eps * y * p * q * n)). For
/// deg(y p q) odd this is the set S_n: all units when deg n is even, the
/// non-squares when deg n is odd.
bool eps_admissible(const QuaternionData& d, const MonicIrreducible& y, const Poly& n_poly, Scalar eps);

/// Least admissible eps in canonical order.
Scalar first_admissible_eps(const QuaternionData& d, const MonicIrreducible& y, const Poly& n_poly);

/// Runs the emptiness criterion and every local check for
/// K = F(sqrt(eps * y * p * q * n)).
/// Throws InvalidInput naming the failed precondition: y in {p, q}; n not
/// monic, square-free and coprime to y*p*q; eps not admissible.
HasseCertificate hasse_certificate(const QuaternionData& d, const MonicIrreducible& y,
                                   const Poly& n_poly, Scalar eps, std::uint64_t seed = 0,
                                   Exec exec = Exec::Parallel);
/// Same, reusing a precomputed D(y).
HasseCertificate hasse_certificate(const QuaternionData& d, const MonicIrreducible& y,
                                   const Poly& n_poly, Scalar eps, const ExclusionTable& table,
                                   std::uint64_t seed = 0, Exec exec = Exec::Parallel);

nlohmann::json to_json(const HasseCertificate& cert);
nlohmann::json to_json(const LocalReport& report);
nlohmann::json to_json(const CriterionReport& report);

/// Sorted keys, two-space indent, LF line endings, trailing newline.
std::string canonical_text(const nlohmann::json& j);

struct VerifyOutcome {
  /// 0 verified, 1 a recorded predicate or verdict does not hold, 3 schema error.
  int exit_code;
  std::string message;
};

/// Re-evaluates every predicate recorded in the certificate.
VerifyOutcome verify_certificate(const nlohmann::json& cert, Exec exec = Exec::Parallel);
VerifyOutcome verify_certificate_text(const std::string& text, Exec exec = Exec::Parallel);

}  // namespace hasse
