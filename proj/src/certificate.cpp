#include "hasse/certificate.hpp"

#include <sstream>

#include "hasse/factor.hpp"

namespace hasse {

using nlohmann::json;

namespace {

Poly radical_of(const QuaternionData& d, const MonicIrreducible& y, const Poly& n_poly) {
  return y.poly() * d.ram1().poly() * d.ram2().poly() * n_poly;
}

void check_preconditions(const QuaternionData& d, const MonicIrreducible& y, const Poly& n_poly,
                         Scalar eps) {
  if (d.is_ramified_at(y)) throw Error(ErrorKind::InvalidInput, "y must differ from ram1 and ram2");
  require_same_field(n_poly, y.poly());
  if (!n_poly.is_monic()) throw Error(ErrorKind::InvalidInput, "n must be monic");
  if (!is_squarefree(n_poly)) throw Error(ErrorKind::InvalidInput, "n must be square-free");
  const Poly ypq = y.poly() * d.ram1().poly() * d.ram2().poly();
  if (!gcd(n_poly, ypq).is_one()) throw Error(ErrorKind::InvalidInput, "n must be coprime to y*ram1*ram2");
  if (eps.is_zero()) throw Error(ErrorKind::InvalidInput, "eps must be a unit");
  if (!eps_admissible(d, y, n_poly, eps)) {
    throw Error(ErrorKind::InvalidInput,
                "eps = " + std::to_string(eps.value()) + " is not in S_n (infinity would split in K)");
  }
}

json witness_json(const LocalWitness& w) {
  return json{{"l", format_poly(w.l.poly())}, {"a", format_poly(w.a)}, {"c", w.c.value()}};
}

json ramified_json(const RamifiedCheck& r) {
  json j{{"behavior", to_string(r.behavior)}, {"ok", r.ok}};
  j["mu"] = r.mu ? json(r.mu->value()) : json(nullptr);
  return j;
}

json discharge_json(const LocalReport& r) {
  json j;
  j["by_witness_up_to"] = r.explicit_max_degree;
  if (r.fast_m && r.explicit_max_degree < r.lambda_max_degree) {
    j["by_fast_bound"] = json::array({r.explicit_max_degree + 1, r.lambda_max_degree});
  } else {
    j["by_fast_bound"] = nullptr;
  }
  j["by_degree_bound_from"] = r.lambda_max_degree + 1;
  return j;
}

}  // namespace

bool eps_admissible(const QuaternionData& d, const MonicIrreducible& y, const Poly& n_poly, Scalar eps) {
  if (eps.is_zero()) return false;
  const Poly radicand = radical_of(d, y, n_poly) * eps;
  if (radicand.degree() % 2 != 0) return true;
  return !is_square(radicand.lead());
}

Scalar first_admissible_eps(const QuaternionData& d, const MonicIrreducible& y, const Poly& n_poly) {
  for (std::uint32_t e = 1; e < y.order().value(); ++e) {
    const Scalar eps(y.order(), e);
    if (eps_admissible(d, y, n_poly, eps)) return eps;
  }
  throw Error(ErrorKind::InvalidInput, "no admissible eps");
}

HasseCertificate hasse_certificate(const QuaternionData& d, const MonicIrreducible& y,
                                   const Poly& n_poly, Scalar eps, std::uint64_t seed, Exec exec) {
  check_preconditions(d, y, n_poly, eps);
  return hasse_certificate(d, y, n_poly, eps, ExclusionTable(y, exec), seed, exec);
}

HasseCertificate hasse_certificate(const QuaternionData& d, const MonicIrreducible& y,
                                   const Poly& n_poly, Scalar eps, const ExclusionTable& table,
                                   std::uint64_t seed, Exec exec) {
  check_preconditions(d, y, n_poly, eps);
  const QuadraticField k(eps, radical_of(d, y, n_poly));
  HasseCertificate cert{
      .field_order = y.order().value(),
      .d = 2,
      .y = y.poly(),
      .ram1 = d.ram1().poly(),
      .ram2 = d.ram2().poly(),
      .n_poly = n_poly,
      .eps = eps,
      .radicand = k.radicand(),
      .exponent_n = exponent_n(y.order(), 2),
      .seed = seed,
      .criterion = nonexistence_criterion(d, y, k, table),
      .local = {},
      .valid = false,
      .reason = {},
  };
  cert.local = local_all(d, k, exec);

  if (!cert.criterion.holds) {
    cert.reason = cert.criterion.reasons.front();
  } else if (!cert.local.infinity_ok) {
    cert.reason = "infinity splits in K";
  } else if (!cert.local.ram1.ok) {
    cert.reason = "no local points above ram1";
  } else if (!cert.local.ram2.ok) {
    cert.reason = "no local points above ram2";
  } else if (!cert.local.missing.empty()) {
    cert.reason = "no witness for l = " + format_poly(cert.local.missing.front().poly());
  }
  cert.valid = cert.reason.empty();
  return cert;
}

json to_json(const CriterionReport& r) {
  json mus = json::array();
  for (const auto& s : r.mu_symbols) mus.push_back({{"mu", s.mu.value()}, {"ram1", s.ram1}, {"ram2", s.ram2}});
  json j{
      {"field_splits_quaternion", r.field_splits},
      {"y_ramified", r.y_ramified},
      {"ram1_excluded", r.ram1_excluded},
      {"ram2_excluded", r.ram2_excluded},
      {"mu_y_obstruction", r.mu_obstruction},
      {"mu_symbols", mus},
      {"holds", r.holds},
      {"reasons", r.reasons},
  };
  const auto ex = r.excluded_prime();
  j["excluded_prime"] = ex ? json(*ex) : json(nullptr);
  return j;
}

json to_json(const LocalReport& r) {
  json witnesses = json::array();
  for (const auto& w : r.witnesses) witnesses.push_back(witness_json(w));
  json missing = json::array();
  for (const auto& l : r.missing) missing.push_back(format_poly(l.poly()));
  json j{
      {"infinity", {{"behavior", to_string(r.infinity)}, {"ok", r.infinity_ok}}},
      {"ram1", ramified_json(r.ram1)},
      {"ram2", ramified_json(r.ram2)},
      {"lambda_max_degree", r.lambda_max_degree},
      {"explicit_max_degree", r.explicit_max_degree},
      {"witnesses", witnesses},
      {"missing", missing},
      {"discharge", discharge_json(r)},
      {"ok", r.ok()},
  };
  j["fast_m"] = r.fast_m ? json(*r.fast_m) : json(nullptr);
  return j;
}

json to_json(const HasseCertificate& c) {
  return json{
      {"schema_version", HasseCertificate::kSchemaVersion},
      {"field_order", c.field_order},
      {"d", c.d},
      {"y", format_poly(c.y)},
      {"ram1", format_poly(c.ram1)},
      {"ram2", format_poly(c.ram2)},
      {"n_poly", format_poly(c.n_poly)},
      {"eps", c.eps.value()},
      {"radicand", format_poly(c.radicand)},
      {"exponent_n", c.exponent_n},
      {"seed", c.seed},
      {"criterion", to_json(c.criterion)},
      {"local", to_json(c.local)},
      {"verdict", c.valid ? "VALID" : "INVALID"},
      {"reason", c.reason},
  };
}

std::string canonical_text(const json& j) { return j.dump(2) + "\n"; }

// Verification

namespace {

struct Failure {
  int code;
  std::string message;
};

[[noreturn]] void fail(const std::string& what) { throw Failure{1, what}; }
[[noreturn]] void schema(const std::string& what) { throw Failure{3, what}; }

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) schema(std::string("missing field '") + key + "'");
  return j.at(key);
}

template <typename T>
T get(const json& j, const char* key) {
  try {
    return field(j, key).get<T>();
  } catch (const json::exception&) {
    schema(std::string("field '") + key + "' has the wrong type");
  }
}

Poly get_poly(const json& j, const char* key, FieldOrder order) {
  try {
    return parse_poly(get<std::string>(j, key), order);
  } catch (const Error& e) {
    schema(std::string("field '") + key + "': " + e.what());
  }
}

MonicIrreducible get_prime(const json& j, const char* key, FieldOrder order) {
  Poly p = get_poly(j, key, order);
  try {
    return MonicIrreducible(std::move(p));
  } catch (const Error& e) {
    fail(std::string(key) + " is not a monic irreducible: " + e.what());
  }
}

void expect(bool recorded, bool actual, const std::string& what) {
  if (recorded != actual) {
    fail(what + ": recorded " + (recorded ? "true" : "false") + ", recomputed " +
         (actual ? "true" : "false"));
  }
}

void verify_ramified(const json& rec, const QuaternionData& d, const QuadraticField& k, Ramified which,
                     const char* name) {
  const RamifiedCheck actual = local_ramified_prime(d, k, which);
  if (get<std::string>(rec, "behavior") != to_string(actual.behavior)) {
    fail(std::string(name) + " behavior in K does not match");
  }
  const json& mu = field(rec, "mu");
  const MonicIrreducible& r = which == Ramified::First ? d.ram1() : d.ram2();
  const MonicIrreducible& s = which == Ramified::First ? d.ram2() : d.ram1();
  if (!mu.is_null()) {
    if (!mu.is_number_integer()) schema(std::string(name) + ".mu has the wrong type");
    const Scalar m(d.order(), mu.get<std::int64_t>());
    if (m.is_zero()) fail(std::string(name) + ".mu is zero");
    const QuadraticField km(m, r.poly());
    if (place_behavior(s, km) == SplitType::Split || infinity_behavior(km) == SplitType::Split) {
      fail(std::string(name) + ".mu = " + std::to_string(m.value()) +
           " leaves a place split in F(sqrt(mu*r))");
    }
  }
  const bool recorded_ok = get<bool>(rec, "ok");
  const bool ok = actual.behavior == SplitType::Inert ||
                  (actual.behavior == SplitType::Ramified && !mu.is_null());
  if (recorded_ok && !ok) fail(std::string(name) + ".ok is not supported by the recorded mu");
  expect(recorded_ok, actual.ok, std::string(name) + ".ok");
}

void verify_local(const json& rec, const QuaternionData& d, const QuadraticField& k, Exec exec) {
  const json& inf = field(rec, "infinity");
  const SplitType inf_actual = infinity_behavior(k);
  if (get<std::string>(inf, "behavior") != to_string(inf_actual)) fail("infinity behavior does not match");
  expect(get<bool>(inf, "ok"), inf_actual != SplitType::Split, "infinity.ok");
  verify_ramified(field(rec, "ram1"), d, k, Ramified::First, "ram1");
  verify_ramified(field(rec, "ram2"), d, k, Ramified::Second, "ram2");

  const int cutoff = lambda_cutoff(d);
  if (get<int>(rec, "lambda_max_degree") != cutoff) fail("lambda_max_degree does not match");

  const json& m_rec = field(rec, "fast_m");
  int explicit_max = cutoff;
  if (m_rec.is_null()) {
    if (fast_m_bound(d)) fail("fast_m recorded as absent but a bound exists");
  } else {
    if (!m_rec.is_number_integer()) schema("fast_m has the wrong type");
    const int m = m_rec.get<int>();
    if (!fast_bound_holds(d, m)) fail("fast_m = " + std::to_string(m) + " does not satisfy the bound");
    if (m > 0 && fast_bound_holds(d, m - 1)) fail("fast_m = " + std::to_string(m) + " is not the least bound");
    explicit_max = std::min(2 * m, cutoff);
  }
  if (get<int>(rec, "explicit_max_degree") != explicit_max) fail("explicit_max_degree does not match");

  const auto places = lambda_set(d, explicit_max);
  const json& ws = field(rec, "witnesses");
  const json& missing = field(rec, "missing");
  if (!ws.is_array() || !missing.is_array()) schema("witnesses and missing must be arrays");

  // Every place appears exactly once, either witnessed or listed as missing.
  std::vector<LocalWitness> witnesses;
  std::vector<MonicIrreducible> missing_places;
  std::size_t wi = 0, mi = 0;
  for (const auto& l : places) {
    const std::string name = format_poly(l.poly());
    if (wi < ws.size() && get<std::string>(ws[wi], "l") == name) {
      const Poly a = get_poly(ws[wi], "a", d.order());
      const Scalar c(d.order(), get<std::int64_t>(ws[wi], "c"));
      LocalWitness w{l, a, c};
      if (!witness_holds(d, w)) fail("witness for l = " + name + " fails the local predicate");
      witnesses.push_back(std::move(w));
      ++wi;
    } else if (mi < missing.size() && missing[mi].is_string() && missing[mi].get<std::string>() == name) {
      missing_places.push_back(l);
      ++mi;
    } else {
      fail("l = " + name + " in Lambda is not covered");
    }
  }
  if (wi != ws.size()) fail("witness list has entries outside Lambda or out of order");
  if (mi != missing.size()) fail("missing list has entries outside Lambda or out of order");

  // Witnesses must be the canonical first ones and missing places must truly lack one.
  std::vector<MonicIrreducible> witnessed;
  for (const auto& w : witnesses) witnessed.push_back(w.l);
  const auto canonical = search_witnesses(d, witnessed, exec);
  for (std::size_t i = 0; i < witnesses.size(); ++i) {
    const auto& w = witnesses[i];
    if (!canonical[i] || !(canonical[i]->a == w.a) || !(canonical[i]->c == w.c)) {
      fail("witness for l = " + format_poly(w.l.poly()) + " is not the canonical first witness");
    }
  }
  const auto recheck = search_witnesses(d, missing_places, exec);
  for (std::size_t i = 0; i < missing_places.size(); ++i) {
    if (recheck[i]) fail("l = " + format_poly(missing_places[i].poly()) + " listed as missing has a witness");
  }

  const bool ok = inf_actual != SplitType::Split && local_ramified_prime(d, k, Ramified::First).ok &&
                  local_ramified_prime(d, k, Ramified::Second).ok && missing_places.empty();
  expect(get<bool>(rec, "ok"), ok, "local.ok");
}

void verify_criterion(const json& rec, const QuaternionData& d, const MonicIrreducible& y,
                      const QuadraticField& k, Exec exec) {
  const CriterionReport actual = nonexistence_criterion(d, y, k, ExclusionTable(y, exec));
  expect(get<bool>(rec, "field_splits_quaternion"), actual.field_splits, "criterion.field_splits_quaternion");
  expect(get<bool>(rec, "y_ramified"), actual.y_ramified, "criterion.y_ramified");
  expect(get<bool>(rec, "ram1_excluded"), actual.ram1_excluded, "criterion.ram1_excluded");
  expect(get<bool>(rec, "ram2_excluded"), actual.ram2_excluded, "criterion.ram2_excluded");
  expect(get<bool>(rec, "mu_y_obstruction"), actual.mu_obstruction, "criterion.mu_y_obstruction");
  expect(get<bool>(rec, "holds"), actual.holds, "criterion.holds");
  if (to_json(actual)["mu_symbols"] != field(rec, "mu_symbols")) fail("criterion.mu_symbols do not match");
  if (to_json(actual)["excluded_prime"] != field(rec, "excluded_prime")) {
    fail("criterion.excluded_prime does not match");
  }
}

}  // namespace

VerifyOutcome verify_certificate(const json& cert, Exec exec) {
  try {
    if (!cert.is_object()) schema("certificate must be a JSON object");
    if (get<int>(cert, "schema_version") != HasseCertificate::kSchemaVersion) {
      schema("unsupported schema_version");
    }
    if (get<int>(cert, "d") != 2) schema("only d = 2 certificates are supported");
    const auto q = get<std::uint32_t>(cert, "field_order");
    std::optional<FieldOrder> order;
    try {
      order.emplace(q);
    } catch (const Error& e) {
      schema(e.what());
    }
    const FieldOrder F = *order;

    const MonicIrreducible y = get_prime(cert, "y", F);
    const MonicIrreducible ram1 = get_prime(cert, "ram1", F);
    const MonicIrreducible ram2 = get_prime(cert, "ram2", F);
    const Poly n_poly = get_poly(cert, "n_poly", F);
    const Scalar eps(F, get<std::int64_t>(cert, "eps"));
    if (ram1 == ram2) fail("ram1 and ram2 coincide");
    const QuaternionData d(ram1, ram2);
    try {
      check_preconditions(d, y, n_poly, eps);
    } catch (const Error& e) {
      fail(std::string("precondition: ") + e.what());
    }

    if (get<std::uint64_t>(cert, "exponent_n") != exponent_n(F, 2)) fail("exponent_n does not match");
    const QuadraticField k(eps, radical_of(d, y, n_poly));
    if (get_poly(cert, "radicand", F) != k.radicand()) fail("radicand does not match");

    const json& crit = field(cert, "criterion");
    const json& local = field(cert, "local");
    verify_local(local, d, k, exec);
    verify_criterion(crit, d, y, k, exec);

    const bool valid = get<bool>(crit, "holds") && get<bool>(local, "ok");
    const std::string verdict = get<std::string>(cert, "verdict");
    if (verdict != "VALID" && verdict != "INVALID") schema("verdict must be VALID or INVALID");
    expect(verdict == "VALID", valid, "verdict");
    return {0, valid ? "certificate verified: VALID" : "certificate verified: INVALID"};
  } catch (const Failure& f) {
    return {f.code, f.message};
  }
}

VerifyOutcome verify_certificate_text(const std::string& text, Exec exec) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    return {3, std::string("malformed JSON: ") + e.what()};
  }
  return verify_certificate(j, exec);
}

}  // namespace hasse
