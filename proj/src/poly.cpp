#include "hasse/poly.hpp"

#include <algorithm>
#include <cctype>

namespace hasse {

namespace {

using Coeff = Poly::Coeff;
using Vec = std::vector<Coeff>;

constexpr std::size_t kKaratsubaThreshold = 256;

// out[0 .. na+nb-1) = a * b. Products stay below 2^32, so a 64-bit
// accumulator absorbs every term before a single reduction.
void schoolbook(const Coeff* a, std::size_t na, const Coeff* b, std::size_t nb, Coeff* out,
                std::uint32_t q) {
  if (na == 0 || nb == 0) return;
  std::vector<std::uint64_t> acc(na + nb - 1, 0);
  for (std::size_t i = 0; i < na; ++i) {
    const std::uint64_t ai = a[i];
    if (ai == 0) continue;
    std::uint64_t* row = acc.data() + i;
    for (std::size_t j = 0; j < nb; ++j) row[j] += ai * b[j];
  }
  for (std::size_t k = 0; k < acc.size(); ++k) out[k] = static_cast<Coeff>(acc[k] % q);
}

// Both operands have length n; out has length 2n-1.
void karatsuba(const Coeff* a, const Coeff* b, std::size_t n, Coeff* out, std::uint32_t q) {
  if (n <= kKaratsubaThreshold) {
    schoolbook(a, n, b, n, out, q);
    return;
  }
  const std::size_t lo = n / 2;
  const std::size_t hi = n - lo;  // hi >= lo

  Vec z0(2 * lo - 1), z2(2 * hi - 1), z1(2 * hi - 1);
  karatsuba(a, b, lo, z0.data(), q);
  karatsuba(a + lo, b + lo, hi, z2.data(), q);

  Vec sa(a + lo, a + n), sb(b + lo, b + n);
  for (std::size_t i = 0; i < lo; ++i) {
    sa[i] = (sa[i] + a[i]) % q;
    sb[i] = (sb[i] + b[i]) % q;
  }
  karatsuba(sa.data(), sb.data(), hi, z1.data(), q);
  for (std::size_t i = 0; i < z0.size(); ++i) z1[i] = (z1[i] + q - z0[i]) % q;
  for (std::size_t i = 0; i < z2.size(); ++i) z1[i] = (z1[i] + q - z2[i]) % q;

  std::fill(out, out + 2 * n - 1, 0);
  for (std::size_t i = 0; i < z0.size(); ++i) out[i] = z0[i];
  for (std::size_t i = 0; i < z2.size(); ++i) out[2 * lo + i] = z2[i];
  for (std::size_t i = 0; i < z1.size(); ++i) out[lo + i] = (out[lo + i] + z1[i]) % q;
}

}  // namespace

Poly::Poly(FieldOrder order, std::vector<Coeff> coeffs) : order_(order), c_(std::move(coeffs)) {
  for (auto& c : c_) c %= order_.value();
  normalize();
}

Poly::Poly(FieldOrder order, std::initializer_list<std::int64_t> coeffs) : order_(order) {
  c_.reserve(coeffs.size());
  for (auto c : coeffs) c_.push_back(Scalar(order, c).value());
  normalize();
}

Poly Poly::constant(FieldOrder order, std::int64_t c) { return Poly(order, {c}); }

Poly Poly::constant(Scalar c) { return Poly(c.order(), Vec{c.value()}); }

Poly Poly::monomial(FieldOrder order, std::int64_t c, std::size_t k) {
  Vec v(k + 1, 0);
  v[k] = Scalar(order, c).value();
  return Poly(order, std::move(v));
}

void Poly::normalize() noexcept {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Scalar Poly::lead() const {
  if (c_.empty()) throw Error(ErrorKind::ZeroInput, "leading coefficient of zero polynomial");
  return Scalar(order_, c_.back());
}

Poly Poly::monic() const {
  if (c_.empty()) return *this;
  return *this * lead().inverse();
}

Poly Poly::derivative() const {
  if (c_.size() <= 1) return Poly(order_);
  Vec d(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) {
    d[i - 1] = static_cast<Coeff>((static_cast<std::uint64_t>(c_[i]) * (i % q())) % q());
  }
  return Poly(order_, std::move(d));
}

Scalar Poly::eval(Scalar x) const {
  if (!(x.order() == order_)) throw Error(ErrorKind::FieldMismatch, "evaluation point");
  std::uint64_t acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = (acc * x.value() + *it) % q();
  return Scalar(order_, static_cast<std::int64_t>(acc));
}

Poly Poly::shifted(std::size_t k) const {
  if (c_.empty()) return *this;
  Vec v(k, 0);
  v.insert(v.end(), c_.begin(), c_.end());
  Poly r(order_);
  r.c_ = std::move(v);
  return r;
}

Poly Poly::operator-() const {
  Poly r(*this);
  for (auto& c : r.c_) c = c == 0 ? 0 : q() - c;
  return r;
}

void require_same_field(const Poly& a, const Poly& b) {
  if (!(a.order() == b.order())) {
    throw Error(ErrorKind::FieldMismatch, "polynomials over F_" + std::to_string(a.q()) +
                                              " and F_" + std::to_string(b.q()));
  }
}

Poly& Poly::operator+=(const Poly& other) {
  require_same_field(*this, other);
  if (c_.size() < other.c_.size()) c_.resize(other.c_.size(), 0);
  for (std::size_t i = 0; i < other.c_.size(); ++i) {
    const Coeff s = c_[i] + other.c_[i];
    c_[i] = s >= q() ? s - q() : s;
  }
  normalize();
  return *this;
}

Poly& Poly::operator-=(const Poly& other) {
  require_same_field(*this, other);
  if (c_.size() < other.c_.size()) c_.resize(other.c_.size(), 0);
  for (std::size_t i = 0; i < other.c_.size(); ++i) {
    c_[i] = c_[i] >= other.c_[i] ? c_[i] - other.c_[i] : c_[i] + q() - other.c_[i];
  }
  normalize();
  return *this;
}

Poly& Poly::operator*=(const Poly& other) { return *this = mul(*this, other); }

Poly& Poly::operator*=(Scalar s) {
  if (!(s.order() == order_)) throw Error(ErrorKind::FieldMismatch, "scalar multiple");
  for (auto& c : c_) c = static_cast<Coeff>(static_cast<std::uint64_t>(c) * s.value() % q());
  normalize();
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) { return mul(a, b); }

bool canonical_less(const Poly& a, const Poly& b) noexcept {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  const auto ca = a.coeffs(), cb = b.coeffs();
  return std::lexicographical_compare(ca.begin(), ca.end(), cb.begin(), cb.end());
}

std::vector<Poly> polys_up_to(FieldOrder order, int max_degree) {
  const std::uint32_t q = order.value();
  std::vector<Poly> out{Poly(order)};
  for (int deg = 0; deg <= max_degree; ++deg) {
    const auto n = static_cast<std::size_t>(deg);
    // Odometer over (c0, ..., c_n) with c0 most significant; c_n runs over units.
    Vec c(n + 1, 0);
    c[n] = 1;
    for (;;) {
      out.emplace_back(order, c);
      std::size_t i = n + 1;
      bool carried_out = true;
      while (i-- > 0) {
        const Coeff low = i == n ? 1 : 0;
        if (++c[i] < q) {
          carried_out = false;
          break;
        }
        c[i] = low;
      }
      if (carried_out) break;
    }
  }
  return out;
}

Poly mul_schoolbook(const Poly& a, const Poly& b) {
  require_same_field(a, b);
  if (a.is_zero() || b.is_zero()) return Poly(a.order());
  Vec out(a.coeffs().size() + b.coeffs().size() - 1);
  schoolbook(a.coeffs().data(), a.coeffs().size(), b.coeffs().data(), b.coeffs().size(),
             out.data(), a.q());
  return Poly(a.order(), std::move(out));
}

Poly mul(const Poly& a, const Poly& b) {
  require_same_field(a, b);
  const std::size_t na = a.coeffs().size(), nb = b.coeffs().size();
  if (std::min(na, nb) <= kKaratsubaThreshold) return mul_schoolbook(a, b);

  const Poly& longer = na >= nb ? a : b;
  const Poly& shorter = na >= nb ? b : a;
  const std::size_t n = shorter.coeffs().size();
  const std::size_t nl = longer.coeffs().size();
  const std::uint32_t q = a.q();

  // Cut the longer operand into blocks of the shorter one's length.
  std::vector<std::uint64_t> acc(nl + n - 1, 0);
  Vec block(n), prod(2 * n - 1);
  for (std::size_t off = 0; off < nl; off += n) {
    const std::size_t len = std::min(n, nl - off);
    std::fill(block.begin(), block.end(), 0);
    std::copy_n(longer.coeffs().data() + off, len, block.begin());
    karatsuba(block.data(), shorter.coeffs().data(), n, prod.data(), q);
    const std::size_t used = std::min(prod.size(), acc.size() - off);
    for (std::size_t i = 0; i < used; ++i) acc[off + i] += prod[i];
  }
  Vec out(acc.size());
  for (std::size_t i = 0; i < acc.size(); ++i) out[i] = static_cast<Coeff>(acc[i] % q);
  return Poly(a.order(), std::move(out));
}

Poly square(const Poly& a) { return mul(a, a); }

std::pair<Poly, Poly> divrem(const Poly& f, const Poly& g) {
  require_same_field(f, g);
  if (g.is_zero()) throw Error(ErrorKind::DivisionByZero, "polynomial division by zero");
  const std::uint32_t q = f.q();
  if (f.degree() < g.degree()) return {Poly(f.order()), f};

  Vec r(f.coeffs().begin(), f.coeffs().end());
  const auto gc = g.coeffs();
  const std::size_t dg = gc.size() - 1;
  const std::uint64_t inv = mod_inverse(gc.back(), q);
  Vec quot(r.size() - dg, 0);
  for (std::size_t i = r.size(); i-- > dg;) {
    const Coeff top = r[i];
    if (top == 0) continue;
    const std::uint64_t factor = top * inv % q;
    quot[i - dg] = static_cast<Coeff>(factor);
    const std::uint64_t neg = q - factor;
    Coeff* base = r.data() + (i - dg);
    for (std::size_t j = 0; j < dg; ++j) {
      base[j] = static_cast<Coeff>((base[j] + neg * gc[j]) % q);
    }
    r[i] = 0;
  }
  r.resize(dg);
  return {Poly(f.order(), std::move(quot)), Poly(f.order(), std::move(r))};
}

Poly operator%(const Poly& f, const Poly& g) { return divrem(f, g).second; }

Poly operator/(const Poly& f, const Poly& g) { return divrem(f, g).first; }

Poly gcd(Poly a, Poly b) {
  require_same_field(a, b);
  while (!b.is_zero()) {
    Poly r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

Poly mulmod(const Poly& a, const Poly& b, const Poly& m) { return mul(a, b) % m; }

Poly powmod(const Poly& f, std::uint64_t e, const Poly& m) {
  if (m.degree() < 1) throw Error(ErrorKind::InvalidDegree, "powmod modulus must have degree >= 1");
  Poly result = Poly::constant(m.order(), 1);
  Poly base = f % m;
  while (e > 0) {
    if (e & 1u) result = mulmod(result, base, m);
    e >>= 1;
    if (e > 0) base = mulmod(base, base, m);
  }
  return result;
}

std::string format_poly(const Poly& f) {
  if (f.is_zero()) return "0";
  std::string out;
  const auto c = f.coeffs();
  for (std::size_t k = c.size(); k-- > 0;) {
    if (c[k] == 0) continue;
    if (!out.empty()) out += '+';
    if (k == 0) {
      out += std::to_string(c[k]);
      continue;
    }
    if (c[k] != 1) out += std::to_string(c[k]) + "*";
    out += 't';
    if (k > 1) out += "^" + std::to_string(k);
  }
  return out;
}

namespace {

class PolyParser {
 public:
  PolyParser(std::string_view text, FieldOrder order) : s_(text), order_(order) {}

  Poly parse() {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == '[') return parse_list();
    return parse_sum();
  }

 private:
  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool at_end() {
    skip_ws();
    return pos_ >= s_.size();
  }

  std::uint64_t parse_number() {
    const std::size_t start = pos_;
    std::uint64_t v = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      v = v * 10 + static_cast<std::uint64_t>(s_[pos_] - '0');
      if (v > (1ull << 40)) throw ParseError(start, "number too large");
      ++pos_;
    }
    if (pos_ == start) throw ParseError(start, "expected a number");
    return v;
  }

  std::uint64_t parse_coefficient() {
    const std::size_t start = pos_;
    const std::uint64_t v = parse_number();
    if (v >= order_.value()) {
      throw ParseError(start, "coefficient " + std::to_string(v) + " is not below q = " +
                                  std::to_string(order_.value()));
    }
    return v;
  }

  Poly parse_list() {
    ++pos_;  // '['
    std::vector<std::int64_t> raw;
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == ']') {
      ++pos_;
    } else {
      for (;;) {
        skip_ws();
        bool neg = false;
        if (pos_ < s_.size() && s_[pos_] == '-') {
          neg = true;
          ++pos_;
          skip_ws();
        }
        const auto v = static_cast<std::int64_t>(parse_coefficient());
        raw.push_back(neg ? -v : v);
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == ',') {
          ++pos_;
          continue;
        }
        if (pos_ < s_.size() && s_[pos_] == ']') {
          ++pos_;
          break;
        }
        throw ParseError(pos_, "expected ',' or ']'");
      }
    }
    if (!at_end()) throw ParseError(pos_, "trailing characters");
    Vec v;
    for (auto c : raw) v.push_back(Scalar(order_, c).value());
    return Poly(order_, std::move(v));
  }

  Poly parse_sum() {
    Poly acc(order_);
    bool first = true;
    for (;;) {
      skip_ws();
      bool neg = false;
      if (pos_ < s_.size() && (s_[pos_] == '+' || s_[pos_] == '-')) {
        neg = s_[pos_] == '-';
        ++pos_;
        skip_ws();
      } else if (!first) {
        if (pos_ >= s_.size()) break;
        throw ParseError(pos_, "expected '+' or '-'");
      }
      if (pos_ >= s_.size()) throw ParseError(pos_, "expected a term");
      Poly term = parse_term();
      acc = neg ? acc - term : acc + term;
      first = false;
      if (at_end()) break;
    }
    return acc;
  }

  Poly parse_term() {
    std::int64_t coeff = 1;
    bool have_coeff = false;
    if (std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      coeff = static_cast<std::int64_t>(parse_coefficient());
      have_coeff = true;
      skip_ws();
      if (pos_ < s_.size() && s_[pos_] == '*') {
        ++pos_;
        skip_ws();
        if (pos_ >= s_.size() || s_[pos_] != 't') throw ParseError(pos_, "expected 't' after '*'");
      }
    }
    if (pos_ < s_.size() && s_[pos_] == 't') {
      ++pos_;
      std::size_t k = 1;
      skip_ws();
      if (pos_ < s_.size() && s_[pos_] == '^') {
        ++pos_;
        skip_ws();
        const std::size_t at = pos_;
        const std::uint64_t e = parse_number();
        if (e > (1u << 24)) throw ParseError(at, "exponent too large");
        k = static_cast<std::size_t>(e);
      }
      return Poly::monomial(order_, coeff, k);
    }
    if (!have_coeff) throw ParseError(pos_, "expected a coefficient or 't'");
    return Poly::constant(order_, coeff);
  }

  std::string_view s_;
  FieldOrder order_;
  std::size_t pos_ = 0;
};

}  // namespace

Poly parse_poly(std::string_view text, FieldOrder order) { return PolyParser(text, order).parse(); }

}  // namespace hasse
