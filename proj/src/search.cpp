#include "hasse/search.hpp"

#include <optional>

namespace hasse {

namespace {

std::vector<MonicIrreducible> primes_up_to(FieldOrder order, int max_degree, const MonicIrreducible& y) {
  std::vector<MonicIrreducible> out;
  for (int deg = 1; deg <= max_degree; ++deg) {
    for (auto& p : enumerate_monic_irreducibles(order, deg)) {
      if (!(p == y)) out.push_back(std::move(p));
    }
  }
  return out;
}

// Filters run from cheapest to most expensive: residue symbols, membership in
// P(y), the ramified-prime mu's, then the full certificate.
std::optional<HasseCertificate> examine(const ExclusionTable& table, const MonicIrreducible& p,
                                        const MonicIrreducible& q, std::uint64_t seed) {
  const MonicIrreducible& y = table.y();
  const QuaternionData d(p, q);
  if (!mu_y_obstruction(d, y)) return std::nullopt;
  if (!table.excludes(p) && !table.excludes(q)) return std::nullopt;
  if (!ramified_mu(p, q) || !ramified_mu(q, p)) return std::nullopt;
  const Poly one = Poly::constant(y.order(), 1);
  const Scalar eps = first_admissible_eps(d, y, one);
  HasseCertificate cert = hasse_certificate(d, y, one, eps, table, seed, Exec::Serial);
  if (!cert.valid) return std::nullopt;
  return cert;
}

}  // namespace

SearchResult search_pairs(const MonicIrreducible& y, const SearchOptions& options) {
  return search_pairs(ExclusionTable(y, options.exec), options);
}

SearchResult search_pairs(const ExclusionTable& table, const SearchOptions& options) {
  const MonicIrreducible& y = table.y();
  const auto firsts = primes_up_to(y.order(), options.max_deg1, y);
  const auto seconds = primes_up_to(y.order(), options.max_deg2, y);

  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < firsts.size(); ++i) {
    for (std::size_t j = 0; j < seconds.size(); ++j) {
      if (!(firsts[i] == seconds[j])) pairs.emplace_back(i, j);
    }
  }

  std::vector<std::optional<HasseCertificate>> slots(pairs.size());
  for_each_index(pairs.size(), options.exec, [&](std::size_t k) {
    slots[k] = examine(table, firsts[pairs[k].first], seconds[pairs[k].second], options.seed);
  });

  SearchResult result;
  result.pairs_examined = pairs.size();
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    if (slots[k]) {
      result.triples.push_back(
          {firsts[pairs[k].first], seconds[pairs[k].second], std::move(*slots[k])});
    }
  }
  return result;
}

}  // namespace hasse
