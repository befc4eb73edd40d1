#include "cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"

#include "hasse/certificate.hpp"
#include "hasse/factor.hpp"
#include "hasse/search.hpp"

namespace hasse::cli {

using nlohmann::json;

namespace {

struct Globals {
  std::uint32_t field_order = 0;
  bool json = false;
  std::uint64_t seed = 0;
  int threads = 0;
};

// Raised for conditions that map to an exit code without an Error of their own.
struct Usage {
  int code;
  std::string message;
};

FieldOrder order_of(const Globals& g) {
  if (g.field_order == 0) throw Usage{kInvalidInput, "--field-order is required"};
  return FieldOrder(g.field_order);
}

MonicIrreducible prime_arg(const std::string& text, FieldOrder order, const char* name) {
  Poly p = parse_poly(text, order);
  try {
    return MonicIrreducible(std::move(p));
  } catch (const Error&) {
    throw Error(ErrorKind::InvalidInput, std::string(name) + " = " + text + " is not a monic irreducible");
  }
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

void emit(std::ostream& out, const json& j) { out << canonical_text(j); }

// Subcommands. Each returns the exit code.

int cmd_wset(const Globals& g, const std::string& y_text, std::ostream& out) {
  const auto y = prime_arg(y_text, order_of(g), "y");
  const auto ws = enumerate_weil(y);
  if (g.json) {
    json rows = json::array();
    for (const auto& w : ws) {
      rows.push_back({{"a1", format_poly(w.a1())},
                      {"mu", w.mu().value()},
                      {"constant_term", format_poly(w.constant_term())},
                      {"discriminant", format_poly(w.discriminant())}});
    }
    emit(out, {{"field_order", g.field_order}, {"y", format_poly(y.poly())}, {"weil", rows}});
    return kOk;
  }
  out << "W(" << format_poly(y.poly()) << ") over F_" << g.field_order << ": " << ws.size()
      << " polynomials\n";
  for (const auto& w : ws) {
    const Poly disc = w.discriminant();
    out << "  X^2 + (" << format_poly(w.a1()) << ")*X + " << format_poly(w.constant_term())
        << "    disc " << format_poly(disc) << " (degree " << disc.degree()
        << (disc.degree() % 2 ? ", odd" : ", non-square leading coefficient") << ")\n";
  }
  return kOk;
}

int cmd_pcheck(const Globals& g, const std::string& y_text, const std::string& p_text, std::ostream& out) {
  const FieldOrder order = order_of(g);
  const auto y = prime_arg(y_text, order, "y");
  const auto p = prime_arg(p_text, order, "p");
  if (p == y) throw Error(ErrorKind::InvalidInput, "p must differ from y");
  const ExclusionTable table(y);
  const bool excluded = table.excludes(p);

  if (g.json) {
    json rows = json::array();
    for (const auto& e : table.entries()) {
      rows.push_back({{"a1", format_poly(e.source.a1())},
                      {"mu", e.source.mu().value()},
                      {"zero", e.is_zero},
                      {"norm_degree", e.value.degree()},
                      {"divisible", !e.is_zero && (e.value % p.poly()).is_zero()}});
    }
    emit(out, {{"field_order", g.field_order},
               {"y", format_poly(y.poly())},
               {"p", format_poly(p.poly())},
               {"exponent_n", exponent_n(order, 2)},
               {"excluded", excluded},
               {"entries", rows}});
  } else {
    out << "n = " << exponent_n(order, 2) << "\n";
    for (const auto& e : table.entries()) {
      out << "  a1 = " << format_poly(e.source.a1()) << ", mu = " << e.source.mu().value() << ": ";
      if (e.is_zero) {
        out << "norm is zero\n";
      } else {
        out << "norm of degree " << e.value.degree()
            << ((e.value % p.poly()).is_zero() ? ", divisible by p\n" : ", not divisible by p\n");
      }
    }
    out << "p = " << format_poly(p.poly()) << (excluded ? " is not in P(y)\n" : " is in P(y)\n");
  }
  return excluded ? kOk : kFalse;
}

int cmd_pset(const Globals& g, const std::string& y_text, std::ostream& out) {
  const auto y = prime_arg(y_text, order_of(g), "y");
  const auto primes = pset(y, g.seed);
  if (g.json) {
    json list = json::array();
    for (const auto& p : primes) list.push_back(format_poly(p.poly()));
    emit(out, {{"field_order", g.field_order}, {"y", format_poly(y.poly())}, {"seed", g.seed}, {"pset", list}});
    return kOk;
  }
  out << "P(" << format_poly(y.poly()) << "): " << primes.size() << " primes\n";
  for (const auto& p : primes) out << "  " << format_poly(p.poly()) << "\n";
  return kOk;
}

struct FieldArgs {
  std::string ram1, ram2, y, n = "1";
  std::optional<std::int64_t> eps;
};

struct Resolved {
  QuaternionData d;
  MonicIrreducible y;
  Poly n;
  Scalar eps;
};

Resolved resolve(const Globals& g, const FieldArgs& a) {
  const FieldOrder order = order_of(g);
  const auto ram1 = prime_arg(a.ram1, order, "ram1");
  const auto ram2 = prime_arg(a.ram2, order, "ram2");
  if (ram1 == ram2) throw Error(ErrorKind::InvalidInput, "ram1 and ram2 must be distinct");
  QuaternionData d(ram1, ram2);
  const auto y = prime_arg(a.y, order, "y");
  Poly n = parse_poly(a.n, order);
  const Scalar eps = a.eps ? Scalar(order, *a.eps) : first_admissible_eps(d, y, n.is_zero() ? Poly::constant(order, 1) : n);
  return {std::move(d), y, std::move(n), eps};
}

void print_criterion(const CriterionReport& r, std::ostream& out) {
  out << "criterion for X^D(K) empty:\n"
      << "  K splits D:              " << yes_no(r.field_splits) << "\n"
      << "  y totally ramified in K: " << yes_no(r.y_ramified) << "\n"
      << "  ram1 not in P(y):        " << yes_no(r.ram1_excluded) << "\n"
      << "  ram2 not in P(y):        " << yes_no(r.ram2_excluded) << "\n"
      << "  mu*y obstruction:        " << yes_no(r.mu_obstruction) << "\n";
  for (const auto& s : r.mu_symbols) {
    out << "    mu = " << s.mu.value() << ": (mu*y/ram1) = " << s.ram1 << ", (mu*y/ram2) = " << s.ram2 << "\n";
  }
  out << "  holds: " << yes_no(r.holds) << "\n";
  for (const auto& reason : r.reasons) out << "    " << reason << "\n";
}

void print_ramified(const char* name, const RamifiedCheck& r, std::ostream& out) {
  out << "  " << name << ": " << to_string(r.behavior);
  if (r.mu) out << ", mu = " << r.mu->value();
  out << (r.ok ? "  OK\n" : "  FAIL\n");
}

void print_local(const LocalReport& r, std::ostream& out) {
  out << "local points:\n"
      << "  infinity: " << to_string(r.infinity) << (r.infinity_ok ? "  OK\n" : "  FAIL\n");
  print_ramified("ram1", r.ram1, out);
  print_ramified("ram2", r.ram2, out);
  std::size_t wi = 0, mi = 0;
  while (wi < r.witnesses.size() || mi < r.missing.size()) {
    const bool take_witness =
        mi == r.missing.size() ||
        (wi < r.witnesses.size() && canonical_less(r.witnesses[wi].l, r.missing[mi]));
    if (take_witness) {
      const auto& w = r.witnesses[wi++];
      out << "  l = " << format_poly(w.l.poly()) << ": a = " << format_poly(w.a) << ", c = " << w.c.value()
          << "  OK\n";
    } else {
      out << "  l = " << format_poly(r.missing[mi++].poly()) << ": no witness  FAIL\n";
    }
  }
  if (r.fast_m) out << "  fast bound m = " << *r.fast_m << "\n";
  if (r.explicit_max_degree < r.lambda_max_degree) {
    out << "  deg l in [" << r.explicit_max_degree + 1 << ", " << r.lambda_max_degree
        << "]: by fast bound  OK\n";
  }
  out << "  deg l >= " << r.lambda_max_degree + 1 << ": by degree bound  OK\n"
      << "  all places: " << (r.ok() ? "OK" : "FAIL") << "\n";
}

int cmd_criterion(const Globals& g, const FieldArgs& a, std::ostream& out) {
  const auto r = resolve(g, a);
  const Poly n = r.n.is_zero() ? Poly::constant(r.y.order(), 1) : r.n;
  const QuadraticField k(r.eps, r.y.poly() * r.d.ram1().poly() * r.d.ram2().poly() * n);
  const auto report = nonexistence_criterion(r.d, r.y, k);
  if (g.json) {
    emit(out, to_json(report));
  } else {
    out << "K = F(sqrt(" << format_poly(k.radicand()) << "))\n";
    print_criterion(report, out);
  }
  return report.holds ? kOk : kFalse;
}

int cmd_local(const Globals& g, const std::string& ram1, const std::string& ram2, const std::string& radicand,
              std::int64_t eps_value, std::ostream& out) {
  const FieldOrder order = order_of(g);
  const auto p = prime_arg(ram1, order, "ram1");
  const auto q = prime_arg(ram2, order, "ram2");
  if (p == q) throw Error(ErrorKind::InvalidInput, "ram1 and ram2 must be distinct");
  const QuaternionData d(p, q);
  const QuadraticField k(Scalar(order, eps_value), parse_poly(radicand, order));
  const auto report = local_all(d, k);
  if (g.json) {
    emit(out, to_json(report));
  } else {
    out << "K = F(sqrt(" << format_poly(k.radicand()) << "))\n";
    print_local(report, out);
  }
  return report.ok() ? kOk : kFalse;
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Usage{kInvalidInput, "cannot write " + path};
  f << text;
}

int cmd_certify(const Globals& g, const FieldArgs& a, const std::string& out_path, std::ostream& out) {
  const auto r = resolve(g, a);
  const auto cert = hasse_certificate(r.d, r.y, r.n, r.eps, g.seed);
  const std::string text = canonical_text(to_json(cert));
  if (!out_path.empty()) write_file(out_path, text);
  if (g.json) {
    out << text;
  } else {
    out << "K = F(sqrt(" << format_poly(cert.radicand) << ")), n = " << cert.exponent_n << "\n";
    print_criterion(cert.criterion, out);
    print_local(cert.local, out);
    out << (cert.valid ? "VALID" : "INVALID: " + cert.reason) << "\n";
    if (!out_path.empty()) out << "certificate written to " << out_path << "\n";
  }
  return cert.valid ? kOk : kFalse;
}

int cmd_verify(const Globals& g, const std::string& path, std::ostream& out) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw Usage{kInvalidInput, "cannot read " + path};
  std::stringstream buffer;
  buffer << f.rdbuf();
  const auto outcome = verify_certificate_text(buffer.str());
  if (g.json) {
    emit(out, {{"exit_code", outcome.exit_code}, {"message", outcome.message}});
  } else {
    out << outcome.message << "\n";
  }
  return outcome.exit_code;
}

int cmd_search(const Globals& g, const std::string& y_text, int max_deg1, int max_deg2,
               const std::string& out_dir, std::ostream& out) {
  const auto y = prime_arg(y_text, order_of(g), "y");
  if (max_deg1 < 1 || max_deg2 < 1) throw Error(ErrorKind::InvalidInput, "degree bounds must be at least 1");
  const auto result = search_pairs(y, {.max_deg1 = max_deg1, .max_deg2 = max_deg2, .seed = g.seed});

  if (!out_dir.empty()) {
    std::filesystem::create_directories(out_dir);
    std::size_t i = 0;
    for (const auto& hit : result.triples) {
      const auto path = std::filesystem::path(out_dir) / ("triple_" + std::to_string(++i) + ".json");
      write_file(path.string(), canonical_text(to_json(hit.certificate)));
    }
  }
  if (g.json) {
    json triples = json::array();
    for (const auto& hit : result.triples) {
      triples.push_back({{"ram1", format_poly(hit.ram1.poly())},
                         {"ram2", format_poly(hit.ram2.poly())},
                         {"eps", hit.certificate.eps.value()},
                         {"certificate", to_json(hit.certificate)}});
    }
    emit(out, {{"field_order", g.field_order},
               {"y", format_poly(y.poly())},
               {"max_deg1", max_deg1},
               {"max_deg2", max_deg2},
               {"pairs_examined", result.pairs_examined},
               {"triples", triples}});
  } else {
    out << "examined " << result.pairs_examined << " pairs, found " << result.triples.size() << " triples\n";
    for (const auto& hit : result.triples) {
      out << "  (" << g.field_order << ", " << format_poly(hit.ram1.poly()) << ", " << format_poly(hit.ram2.poly())
          << ")  eps = " << hit.certificate.eps.value() << "\n";
    }
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Hasse principle checks for Drinfeld-Stuhler curves over F_q(t)", "hasse"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  app.add_option("--field-order", g.field_order, "Field size q (odd prime)");
  app.add_flag("--json", g.json, "Emit canonical JSON");
  app.add_option("--seed", g.seed, "Seed for randomized factorization");
  app.add_option("--threads", g.threads, "Worker threads (0 = runtime default)")->check(CLI::NonNegativeNumber);

  std::string y_text = "t", p_text, ram1, ram2, radicand, out_path, out_dir, cert_path;
  std::int64_t eps_value = 1;
  int max_deg1 = 1, max_deg2 = 1;
  FieldArgs fa;

  auto* wset = app.add_subcommand("wset", "List the Weil polynomials W(y)");
  wset->add_option("--y", y_text, "Monic irreducible y")->capture_default_str();

  auto* pcheck = app.add_subcommand("pcheck", "Decide whether p lies outside P(y)");
  pcheck->add_option("--y", y_text, "Monic irreducible y")->capture_default_str();
  pcheck->add_option("-p,--prime", p_text, "Monic irreducible p")->required();

  auto* pset_cmd = app.add_subcommand("pset", "Factor D(y) and list P(y)");
  pset_cmd->add_option("--y", y_text, "Monic irreducible y")->capture_default_str();

  auto add_field_args = [&](CLI::App* sub) {
    sub->add_option("--ram1", fa.ram1, "First ramified prime")->required();
    sub->add_option("--ram2", fa.ram2, "Second ramified prime")->required();
    sub->add_option("--y", fa.y, "Monic irreducible y")->default_val("t");
    sub->add_option("--n", fa.n, "Monic square-free n coprime to y*ram1*ram2")->capture_default_str();
    sub->add_option("--eps", fa.eps, "Unit eps (default: first admissible)");
  };
  auto* criterion = app.add_subcommand("criterion", "Evaluate the emptiness criterion for X^D(K)");
  add_field_args(criterion);

  auto* local = app.add_subcommand("local", "Check local points of X^D over K = F(sqrt(eps*radicand))");
  local->add_option("--ram1", ram1, "First ramified prime")->required();
  local->add_option("--ram2", ram2, "Second ramified prime")->required();
  local->add_option("--radicand", radicand, "Monic square-free radicand")->required();
  local->add_option("--eps", eps_value, "Unit eps")->capture_default_str();

  auto* certify = app.add_subcommand("certify", "Build a Hasse principle certificate");
  add_field_args(certify);
  certify->add_option("--out", out_path, "Write the certificate JSON here");

  auto* verify = app.add_subcommand("verify", "Re-check a certificate from its recorded fields");
  verify->add_option("certificate", cert_path, "Certificate JSON file")->required();

  auto* search = app.add_subcommand("search", "Search ramified pairs (ram1, ram2) for Hasse violations");
  search->add_option("--y", y_text, "Monic irreducible y")->capture_default_str();
  search->add_option("--max-deg1", max_deg1, "Maximal degree of ram1")->required();
  search->add_option("--max-deg2", max_deg2, "Maximal degree of ram2")->required();
  search->add_option("--out-dir", out_dir, "Write one certificate per triple into this directory");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInvalidInput;
  }

  try {
    set_thread_count(g.threads);
    if (*wset) return cmd_wset(g, y_text, out);
    if (*pcheck) return cmd_pcheck(g, y_text, p_text, out);
    if (*pset_cmd) return cmd_pset(g, y_text, out);
    if (*criterion) return cmd_criterion(g, fa, out);
    if (*local) return cmd_local(g, ram1, ram2, radicand, eps_value, out);
    if (*certify) return cmd_certify(g, fa, out_path, out);
    if (*verify) return cmd_verify(g, cert_path, out);
    if (*search) return cmd_search(g, y_text, max_deg1, max_deg2, out_dir, out);
  } catch (const Usage& u) {
    err << "error: " << u.message << "\n";
    return u.code;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kFormatError;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kInvalidInput;
  }
  return kInvalidInput;
}

}  // namespace hasse::cli
