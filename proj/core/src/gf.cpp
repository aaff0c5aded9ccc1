// Copyright 2026 The odisc Authors
// SPDX-License-Identifier: Apache-2.0

#include "odisc/gf.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <tuple>

#include "odisc/error.hpp"

namespace odisc {

namespace detail {

struct FieldData {
  std::uint32_t p = 2;
  unsigned k = 1;
  std::uint32_t q = 2;
  std::vector<std::uint32_t> modulus;  // monic, size k+1
  std::vector<std::uint32_t> pw;       // p^i, i <= k
  std::vector<std::uint32_t> log;      // size q, log[0] unused
  std::vector<std::uint32_t> exp;      // size 2(q-1)
  Elem primitive{1};
};

}  // namespace detail

namespace {

constexpr std::uint64_t kMaxOrder = 1u << 20;

using Digits = std::vector<std::uint32_t>;

Digits to_digits(std::uint32_t v, std::uint32_t p, unsigned k) {
  Digits d(k);
  for (unsigned i = 0; i < k; ++i) {
    d[i] = v % p;
    v /= p;
  }
  return d;
}

std::uint32_t from_digits(const Digits& d, std::uint32_t p) {
  std::uint32_t v = 0;
  for (std::size_t i = d.size(); i-- > 0;) v = v * p + d[i];
  return v;
}

// a*b mod (modulus, p); a, b have k digits.
Digits slow_mul(const Digits& a, const Digits& b, const Digits& mod,
                std::uint32_t p) {
  const unsigned k = static_cast<unsigned>(mod.size() - 1);
  std::vector<std::uint64_t> prod(2 * k, 0);
  std::vector<unsigned> nz;
  for (unsigned j = 0; j < k; ++j)
    if (b[j] != 0) nz.push_back(j);
  for (unsigned i = 0; i < k; ++i) {
    if (a[i] == 0) continue;
    for (unsigned j : nz)
      prod[i + j] = (prod[i + j] + std::uint64_t(a[i]) * b[j]) % p;
  }
  for (unsigned d = 2 * k - 1; d >= k; --d) {
    std::uint64_t c = prod[d] % p;
    if (c == 0) continue;
    // subtract c * x^(d-k) * modulus
    for (unsigned i = 0; i <= k; ++i) {
      std::uint64_t t = (c * mod[i]) % p;
      prod[d - k + i] = (prod[d - k + i] + p - t) % p;
    }
  }
  Digits r(k);
  for (unsigned i = 0; i < k; ++i) r[i] = static_cast<std::uint32_t>(prod[i] % p);
  return r;
}

Digits slow_pow(Digits a, std::uint64_t e, const Digits& mod, std::uint32_t p) {
  const unsigned k = static_cast<unsigned>(mod.size() - 1);
  Digits r(k, 0);
  r[0] = 1;
  while (e) {
    if (e & 1) r = slow_mul(r, a, mod, p);
    a = slow_mul(a, a, mod, p);
    e >>= 1;
  }
  return r;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::int64_t mod_p(std::int64_t a, std::uint32_t p) {
  std::int64_t r = a % static_cast<std::int64_t>(p);
  return r < 0 ? r + p : r;
}

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) {
  std::uint64_t r = 1, e = p - 2;
  a %= p;
  while (e) {
    if (e & 1) r = r * a % p;
    a = a * a % p;
    e >>= 1;
  }
  return r;
}

// Remainder of `a` by monic `b` over GF(p); both least significant first.
std::vector<std::int64_t> poly_rem(std::vector<std::int64_t> a,
                                   const std::vector<std::int64_t>& b,
                                   std::uint32_t p) {
  const std::size_t db = b.size() - 1;
  while (a.size() > db) {
    std::int64_t c = a.back();
    if (c != 0) {
      std::size_t shift = a.size() - 1 - db;
      for (std::size_t i = 0; i <= db; ++i)
        a[shift + i] = mod_p(a[shift + i] - c * b[i], p);
    }
    a.pop_back();
  }
  return a;
}

std::shared_ptr<const detail::FieldData> build(std::uint32_t p, unsigned k,
                                               Digits modulus) {
  auto d = std::make_shared<detail::FieldData>();
  d->p = p;
  d->k = k;
  d->modulus = std::move(modulus);
  d->pw.resize(k + 1);
  d->pw[0] = 1;
  for (unsigned i = 1; i <= k; ++i) d->pw[i] = d->pw[i - 1] * p;
  d->q = d->pw[k];
  const std::uint32_t q = d->q;
  const std::uint64_t n = q - 1;

  // Primitive element: least encoding whose order is q-1.
  const auto factors = prime_factors(n);
  std::uint32_t g = 1;
  for (std::uint32_t cand = 1; cand < q; ++cand) {
    Digits c = to_digits(cand, p, k);
    bool ok = true;
    for (auto r : factors) {
      Digits t = slow_pow(c, n / r, d->modulus, p);
      if (from_digits(t, p) == 1) {
        ok = false;
        break;
      }
    }
    if (ok) {
      g = cand;
      break;
    }
  }
  d->primitive = Elem{g};

  d->log.assign(q, 0);
  d->exp.assign(2 * n, 0);
  Digits gd = to_digits(g, p, k);
  Digits cur(k, 0);
  cur[0] = 1;
  for (std::uint64_t i = 0; i < n; ++i) {
    std::uint32_t v = from_digits(cur, p);
    d->exp[i] = v;
    d->exp[i + n] = v;
    d->log[v] = static_cast<std::uint32_t>(i);
    cur = slow_mul(cur, gd, d->modulus, p);
  }
  return d;
}

struct CacheKey {
  std::uint32_t p;
  unsigned k;
  Digits modulus;
  auto operator<=>(const CacheKey&) const = default;
};

std::mutex& cache_mutex() {
  static std::mutex m;
  return m;
}
std::map<CacheKey, std::shared_ptr<const detail::FieldData>>& cache() {
  static std::map<CacheKey, std::shared_ptr<const detail::FieldData>> c;
  return c;
}

const std::shared_ptr<const detail::FieldData>& gf2_data() {
  static const auto d = build(2, 1, Digits{1, 1});
  return d;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

bool is_irreducible_mod_p(std::span<const std::int64_t> poly, std::uint32_t p) {
  std::vector<std::int64_t> f;
  for (auto c : poly) f.push_back(mod_p(c, p));
  while (!f.empty() && f.back() == 0) f.pop_back();
  if (f.size() < 2) return false;
  const std::size_t deg = f.size() - 1;
  if (f.back() != 1) {
    std::int64_t li = static_cast<std::int64_t>(inv_mod(f.back(), p));
    for (auto& c : f) c = c * li % p;
  }
  if (deg == 1) return true;
  for (std::size_t d = 1; d <= deg / 2; ++d) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < d; ++i) count *= p;
    for (std::uint64_t code = 0; code < count; ++code) {
      std::vector<std::int64_t> h(d + 1);
      std::uint64_t c = code;
      for (std::size_t i = 0; i < d; ++i) {
        h[i] = static_cast<std::int64_t>(c % p);
        c /= p;
      }
      h[d] = 1;
      auto r = poly_rem(f, h, p);
      if (std::all_of(r.begin(), r.end(), [](std::int64_t x) { return x == 0; }))
        return false;
    }
  }
  return true;
}

FiniteField make_field(std::uint32_t p, unsigned k,
                       std::optional<std::vector<std::int64_t>> modulus) {
  require(is_prime(p), "make_field: " + std::to_string(p) + " is not prime");
  require(k >= 1, "make_field: degree must be at least 1");
  std::uint64_t q = 1;
  for (unsigned i = 0; i < k; ++i) {
    q *= p;
    if (q > kMaxOrder)
      throw Error(ErrorKind::BudgetExceeded,
                  "make_field: field order exceeds 2^20");
  }

  Digits mod;
  if (modulus) {
    std::vector<std::int64_t> m;
    for (auto c : *modulus) m.push_back(mod_p(c, p));
    while (!m.empty() && m.back() == 0) m.pop_back();
    require(m.size() == k + 1,
            "make_field: modulus must have degree " + std::to_string(k));
    require(m.back() == 1, "make_field: modulus must be monic");
    require(is_irreducible_mod_p(m, p), "make_field: modulus is reducible");
    for (auto c : m) mod.push_back(static_cast<std::uint32_t>(c));
  } else {
    std::uint64_t count = q;  // encodings of the k lower coefficients
    for (std::uint64_t code = 0; code < count; ++code) {
      std::vector<std::int64_t> m(k + 1);
      std::uint64_t c = code;
      for (unsigned i = 0; i < k; ++i) {
        m[i] = static_cast<std::int64_t>(c % p);
        c /= p;
      }
      m[k] = 1;
      if (is_irreducible_mod_p(m, p)) {
        for (auto x : m) mod.push_back(static_cast<std::uint32_t>(x));
        break;
      }
    }
  }

  CacheKey key{p, k, mod};
  std::lock_guard<std::mutex> lock(cache_mutex());
  auto it = cache().find(key);
  if (it != cache().end()) return FiniteField(it->second);
  auto data = build(p, k, mod);
  cache().emplace(key, data);
  return FiniteField(data);
}

FiniteField::FiniteField() : d_(gf2_data()) {}

std::uint32_t FiniteField::characteristic() const { return d_->p; }
unsigned FiniteField::degree() const { return d_->k; }
std::uint32_t FiniteField::order() const { return d_->q; }
const std::vector<std::uint32_t>& FiniteField::modulus() const {
  return d_->modulus;
}

Elem FiniteField::from_int(std::int64_t n) const {
  return Elem{static_cast<std::uint32_t>(mod_p(n, d_->p))};
}

Elem FiniteField::from_coeffs(std::span<const std::int64_t> c) const {
  std::vector<std::int64_t> a;
  for (auto x : c) a.push_back(mod_p(x, d_->p));
  std::vector<std::int64_t> m(d_->modulus.begin(), d_->modulus.end());
  if (a.size() > d_->k) a = poly_rem(a, m, d_->p);
  std::uint32_t v = 0;
  for (std::size_t i = a.size(); i-- > 0;)
    v = v * d_->p + static_cast<std::uint32_t>(a[i]);
  return Elem{v};
}

std::vector<std::uint32_t> FiniteField::coeffs(Elem a) const {
  return to_digits(a.v, d_->p, d_->k);
}

Elem FiniteField::add(Elem a, Elem b) const {
  const std::uint32_t p = d_->p;
  if (p == 2) return Elem{a.v ^ b.v};
  if (d_->k == 1) return Elem{(a.v + b.v) % p};
  std::uint32_t r = 0, x = a.v, y = b.v;
  for (unsigned i = 0; i < d_->k; ++i) {
    r += ((x % p + y % p) % p) * d_->pw[i];
    x /= p;
    y /= p;
  }
  return Elem{r};
}

Elem FiniteField::neg(Elem a) const {
  const std::uint32_t p = d_->p;
  if (p == 2) return a;
  if (d_->k == 1) return Elem{(p - a.v) % p};
  std::uint32_t r = 0, x = a.v;
  for (unsigned i = 0; i < d_->k; ++i) {
    r += ((p - x % p) % p) * d_->pw[i];
    x /= p;
  }
  return Elem{r};
}

Elem FiniteField::sub(Elem a, Elem b) const { return add(a, neg(b)); }

Elem FiniteField::mul(Elem a, Elem b) const {
  if (a.v == 0 || b.v == 0) return Elem{0};
  return Elem{d_->exp[d_->log[a.v] + d_->log[b.v]]};
}

Elem FiniteField::inv(Elem a) const {
  require(a.v != 0, "finite field: inverse of zero");
  const std::uint32_t n = d_->q - 1;
  return Elem{d_->exp[(n - d_->log[a.v]) % n]};
}

Elem FiniteField::pow(Elem a, std::uint64_t e) const {
  if (e == 0) return Elem{1};
  if (a.v == 0) return Elem{0};
  const std::uint64_t n = d_->q - 1;
  return Elem{d_->exp[(std::uint64_t(d_->log[a.v]) * (e % n)) % n]};
}

Elem FiniteField::primitive() const { return d_->primitive; }

std::uint32_t FiniteField::log(Elem a) const {
  require(a.v != 0, "finite field: log of zero");
  return d_->log[a.v];
}

Elem FiniteField::exp(std::uint64_t n) const {
  return Elem{d_->exp[n % (d_->q - 1)]};
}

std::string FiniteField::to_string(Elem a) const {
  if (d_->k == 1) return std::to_string(a.v);
  auto c = coeffs(a);
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = c.size(); i-- > 0;) {
    if (c[i] == 0) continue;
    if (!first) os << '+';
    first = false;
    if (i == 0) {
      os << c[i];
      continue;
    }
    if (c[i] != 1) os << c[i];
    os << 'x';
    if (i > 1) os << '^' << i;
  }
  if (first) os << '0';
  return os.str();
}

std::string FiniteField::name() const {
  if (d_->k == 1) return "GF(" + std::to_string(d_->p) + ")";
  return "GF(" + std::to_string(d_->p) + "^" + std::to_string(d_->k) + ")";
}

bool FiniteField::same_as(const FiniteField& o) const {
  return d_ == o.d_ ||
         (d_->p == o.d_->p && d_->k == o.d_->k && d_->modulus == o.d_->modulus);
}

namespace {
void check_same(const FiniteField& a, const FiniteField& b) {
  require(a == b, "finite field: operands from different fields");
}
}  // namespace

FieldElement FieldElement::operator+(const FieldElement& o) const {
  check_same(field_, o.field_);
  return {field_, field_.add(value_, o.value_)};
}
FieldElement FieldElement::operator-(const FieldElement& o) const {
  check_same(field_, o.field_);
  return {field_, field_.sub(value_, o.value_)};
}
FieldElement FieldElement::operator*(const FieldElement& o) const {
  check_same(field_, o.field_);
  return {field_, field_.mul(value_, o.value_)};
}
FieldElement FieldElement::operator/(const FieldElement& o) const {
  check_same(field_, o.field_);
  return {field_, field_.div(value_, o.value_)};
}

bool is_square(const FieldElement& a) {
  const auto& f = a.field();
  require(f.characteristic() != 2,
          "is_square: characteristic 2, use artin_schreier_trivial");
  require(!a.is_zero(), "is_square: zero has no square class");
  return f.log(a.value()) % 2 == 0;
}

std::uint32_t absolute_trace(const FiniteField& f, Elem a) {
  // sum of a^(p^i); the result lies in the prime field.
  Elem s = f.zero(), t = a;
  for (unsigned i = 0; i < f.degree(); ++i) {
    s = f.add(s, t);
    t = f.pow(t, f.characteristic());
  }
  return s.v;
}

bool artin_schreier_trivial(const FieldElement& b) {
  require(b.field().characteristic() == 2,
          "artin_schreier_trivial: odd characteristic, use is_square");
  return absolute_trace(b.field(), b.value()) == 0;
}

struct Embedding::Data {
  FiniteField sub, big;
  std::vector<Elem> lift;                  // indexed by sub element
  std::map<std::uint32_t, std::uint32_t> back;  // big -> sub
};

Embedding::Embedding(const FiniteField& sub, const FiniteField& big) {
  require(sub.characteristic() == big.characteristic() &&
              big.degree() % sub.degree() == 0,
          "Embedding: " + sub.name() + " is not a subfield of " + big.name());
  auto d = std::make_shared<Data>();
  d->sub = sub;
  d->big = big;
  const std::uint64_t qs = sub.order();
  // Subfield elements inside big: 0 and the powers of g^((q-1)/(qs-1)).
  const std::uint64_t step = (std::uint64_t(big.order()) - 1) / (qs - 1);
  const auto& m = sub.modulus();
  Elem root{0};
  bool found = false;
  for (std::uint64_t j = 0; j < qs && !found; ++j) {
    Elem r = j == 0 ? Elem{0} : big.exp((j - 1) * step);
    Elem acc{0};
    for (std::size_t i = m.size(); i-- > 0;)
      acc = big.add(big.mul(acc, r), big.from_int(m[i]));
    if (acc.v == 0) {
      root = r;
      found = true;
    }
  }
  require(found, "Embedding: no root of the subfield modulus");
  d->lift.resize(qs);
  for (std::uint32_t a = 0; a < qs; ++a) {
    auto c = sub.coeffs(Elem{a});
    Elem acc{0};
    for (std::size_t i = c.size(); i-- > 0;)
      acc = big.add(big.mul(acc, root), big.from_int(c[i]));
    d->lift[a] = acc;
    d->back[acc.v] = a;
  }
  d_ = std::move(d);
}

const FiniteField& Embedding::sub() const { return d_->sub; }
const FiniteField& Embedding::big() const { return d_->big; }
Elem Embedding::lift(Elem a) const { return d_->lift.at(a.v); }
std::optional<Elem> Embedding::restrict(Elem b) const {
  auto it = d_->back.find(b.v);
  if (it == d_->back.end()) return std::nullopt;
  return Elem{it->second};
}

namespace {

std::mutex& emb_mutex() {
  static std::mutex m;
  return m;
}

const Embedding& cached_embedding(const FiniteField& sub,
                                  const FiniteField& big) {
  using Key = std::tuple<std::uint32_t, std::vector<std::uint32_t>,
                         std::vector<std::uint32_t>>;
  static std::map<Key, std::unique_ptr<Embedding>> table;
  Key key{sub.characteristic(), sub.modulus(), big.modulus()};
  std::lock_guard<std::mutex> lock(emb_mutex());
  auto it = table.find(key);
  if (it == table.end())
    it = table.emplace(key, std::make_unique<Embedding>(sub, big)).first;
  return *it->second;
}

FiniteField subfield_of(const FieldElement& a, unsigned d) {
  const auto& f = a.field();
  require(d >= 1 && f.degree() % d == 0,
          "norm/trace: subfield degree " + std::to_string(d) +
              " does not divide " + std::to_string(f.degree()));
  return make_field(f.characteristic(), d);
}

}  // namespace

FieldElement norm_to(const FieldElement& a, const FiniteField& sub) {
  const auto& f = a.field();
  const auto& emb = cached_embedding(sub, f);
  const std::uint64_t e = (std::uint64_t(f.order()) - 1) / (sub.order() - 1);
  Elem n = f.pow(a.value(), e);
  return {sub, *emb.restrict(n)};
}

FieldElement trace_to(const FieldElement& a, const FiniteField& sub) {
  const auto& f = a.field();
  const auto& emb = cached_embedding(sub, f);
  const unsigned r = f.degree() / sub.degree();
  Elem s = f.zero(), t = a.value();
  for (unsigned i = 0; i < r; ++i) {
    s = f.add(s, t);
    t = f.pow(t, sub.order());
  }
  return {sub, *emb.restrict(s)};
}

FieldElement norm(const FieldElement& a, unsigned subfield_degree) {
  return norm_to(a, subfield_of(a, subfield_degree));
}

FieldElement trace(const FieldElement& a, unsigned subfield_degree) {
  return trace_to(a, subfield_of(a, subfield_degree));
}

}  // namespace odisc
