// Copyright 2026 The odisc Authors
// SPDX-License-Identifier: Apache-2.0

#include "odisc/numfield.hpp"

#include <algorithm>
#include <cmath>
#include <bit>
#include <mutex>
#include <numeric>

#include "local.hpp"
#include "odisc/error.hpp"

namespace odisc {

namespace {

using detail::NumberFieldData;
using QVec = std::vector<Rational>;
using QMat = std::vector<QVec>;

// ---------------------------------------------------------------- Q[x]

void qtrim(QVec& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

QVec qmul(const QVec& a, const QVec& b) {
  if (a.empty() || b.empty()) return {};
  QVec r(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  return r;
}

// Remainder modulo a monic integer polynomial, padded to exactly m entries.
QVec reduce_mod(QVec a, const std::vector<Integer>& f) {
  const std::size_t m = f.size() - 1;
  for (std::size_t k = a.size(); k-- > m;) {
    Rational c = a[k];
    if (c == 0) continue;
    for (std::size_t j = 0; j < m; ++j) a[k - m + j] -= c * Rational(f[j]);
    a[k] = 0;
  }
  a.resize(m, Rational(0));
  return a;
}

QVec qdivmod(QVec a, const QVec& b, QVec* quot) {
  qtrim(a);
  const std::size_t db = b.size() - 1;
  QVec q(a.size() >= b.size() ? a.size() - db : 0, Rational(0));
  while (a.size() >= b.size()) {
    Rational c = a.back() / b.back();
    std::size_t s = a.size() - b.size();
    q[s] = c;
    for (std::size_t j = 0; j < b.size(); ++j) a[s + j] -= c * b[j];
    qtrim(a);
  }
  if (quot) *quot = q;
  return a;
}

QVec to_q(const std::vector<Integer>& f) { return QVec(f.begin(), f.end()); }

Rational eval(const QVec& a, const Rational& x) {
  Rational r = 0;
  for (std::size_t i = a.size(); i-- > 0;) r = r * x + a[i];
  return r;
}

int sign(const Rational& r) { return r > 0 ? 1 : (r < 0 ? -1 : 0); }

// ---------------------------------------------------------------- Sturm

std::vector<QVec> sturm_chain(const std::vector<Integer>& f) {
  std::vector<QVec> chain{to_q(f)};
  QVec d;
  for (std::size_t i = 1; i < f.size(); ++i) d.push_back(Rational(f[i]) * Rational(i));
  qtrim(d);
  chain.push_back(d);
  while (chain.back().size() > 1) {
    QVec r = qdivmod(chain[chain.size() - 2], chain.back(), nullptr);
    if (r.empty()) break;
    for (auto& c : r) c = -c;
    chain.push_back(r);
  }
  return chain;
}

int sign_changes(const std::vector<QVec>& chain, const Rational& x) {
  int n = 0, last = 0;
  for (const auto& p : chain) {
    int s = sign(eval(p, x));
    if (s == 0) continue;
    if (last != 0 && s != last) ++n;
    last = s;
  }
  return n;
}

// Roots of a squarefree f in (lo, hi], none at the endpoints of the output.
void isolate(const std::vector<QVec>& chain, const QVec& f, Rational lo, Rational hi,
             std::vector<std::pair<Rational, Rational>>& out) {
  int n = sign_changes(chain, lo) - sign_changes(chain, hi);
  if (n == 0) return;
  if (n == 1 && eval(f, hi) != 0) {
    out.emplace_back(lo, hi);
    return;
  }
  Rational mid = (lo + hi) / 2;
  if (eval(f, mid) == 0) {  // rational root: degree 1
    out.emplace_back(mid, mid);
    return;
  }
  isolate(chain, f, lo, mid, out);
  isolate(chain, f, mid, hi, out);
}

std::vector<std::pair<Rational, Rational>> real_roots(const std::vector<Integer>& f) {
  Integer bound = 0;
  for (std::size_t i = 0; i + 1 < f.size(); ++i) bound = std::max(bound, Integer(abs(f[i])));
  Rational b = Rational(bound + 1);
  auto chain = sturm_chain(f);
  std::vector<std::pair<Rational, Rational>> out;
  isolate(chain, to_q(f), -b, b, out);
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------- linear algebra

std::optional<QMat> q_inverse(QMat a) {
  const std::size_t n = a.size();
  QMat inv(n, QVec(n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col] == 0) ++piv;
    if (piv == n) return std::nullopt;
    std::swap(a[piv], a[col]);
    std::swap(inv[piv], inv[col]);
    Rational d = a[col][col];
    for (std::size_t j = 0; j < n; ++j) {
      a[col][j] /= d;
      inv[col][j] /= d;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      Rational c = a[r][col];
      for (std::size_t j = 0; j < n; ++j) {
        a[r][j] -= c * a[col][j];
        inv[r][j] -= c * inv[col][j];
      }
    }
  }
  return inv;
}

Rational q_det(QMat a) {
  const std::size_t n = a.size();
  Rational det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != col) {
      std::swap(a[piv], a[col]);
      det = -det;
    }
    det *= a[col][col];
    for (std::size_t r = col + 1; r < n; ++r) {
      if (a[r][col] == 0) continue;
      Rational c = a[r][col] / a[col][col];
      for (std::size_t j = col; j < n; ++j) a[r][j] -= c * a[col][j];
    }
  }
  return det;
}

QVec row_times(const QVec& v, const QMat& m) {
  QVec r(m.empty() ? 0 : m[0].size(), Rational(0));
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    for (std::size_t j = 0; j < r.size(); ++j) r[j] += v[i] * m[i][j];
  }
  return r;
}

// Column j holds a * theta^j.
QMat mult_matrix(const QVec& a, const std::vector<Integer>& f) {
  const std::size_t m = f.size() - 1;
  QMat M(m, QVec(m, Rational(0)));
  QVec col = a;
  for (std::size_t j = 0; j < m; ++j) {
    for (std::size_t i = 0; i < m; ++i) M[i][j] = col[i];
    QVec shifted(m + 1, Rational(0));
    for (std::size_t i = 0; i < m; ++i) shifted[i + 1] = col[i];
    col = reduce_mod(shifted, f);
  }
  return M;
}

// Faddeev-LeVerrier.
QVec charpoly_of(const QMat& A) {
  const std::size_t n = A.size();
  QVec c(n + 1, Rational(0));
  c[n] = 1;
  QMat M(n, QVec(n, Rational(0)));
  for (std::size_t k = 1; k <= n; ++k) {
    QMat AM(n, QVec(n, Rational(0)));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t l = 0; l < n; ++l) {
        if (A[i][l] == 0) continue;
        for (std::size_t j = 0; j < n; ++j) AM[i][j] += A[i][l] * M[l][j];
      }
    for (std::size_t i = 0; i < n; ++i) AM[i][i] += c[n - k + 1];
    M = AM;
    Rational tr = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t l = 0; l < n; ++l) tr += A[i][l] * M[l][i];
    c[n - k] = -tr / Rational(k);
  }
  return c;
}

bool all_integer(const QVec& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& r) { return denominator(r) == 1; });
}

// ---------------------------------------------------------------- irreducibility

bool divides_over_z(const std::vector<Integer>& f, const zp::BigPoly& g) {
  QVec q;
  QVec r = qdivmod(to_q(f), QVec(g.begin(), g.end()), &q);
  return r.empty() && all_integer(q);
}

// Zassenhaus: factor mod a good prime, Hensel lift, try subset products.
bool irreducible_over_q(const std::vector<Integer>& f) {
  const unsigned m = static_cast<unsigned>(f.size() - 1);
  if (m <= 1) return true;
  std::int64_t p = 3;
  std::vector<std::pair<zp::Poly, unsigned>> fac;
  for (;; p += 2) {
    if (!is_prime(static_cast<std::uint64_t>(p))) continue;
    zp::Poly fp = zp::reduce(f, p);
    if (zp::gcd(fp, zp::derivative(fp, p), p) != zp::Poly{1}) continue;
    fac = zp::factor(fp, p);
    break;
  }
  if (fac.size() == 1) return true;

  Integer norm1 = 0;
  for (const auto& c : f) norm1 += abs(c);
  Integer bound = 2 * (Integer(1) << m) * norm1;
  unsigned n = 1;
  Integer pn = p;
  while (pn <= bound) {
    pn *= p;
    ++n;
  }
  std::vector<zp::BigPoly> lifted;
  zp::BigPoly current = f;
  for (std::size_t i = 0; i + 1 < fac.size(); ++i) {
    zp::Poly rest{1};
    for (std::size_t j = i + 1; j < fac.size(); ++j) rest = zp::mul(rest, fac[j].first, p);
    zp::BigPoly g, h;
    zp::hensel_lift(current, fac[i].first, rest, p, n, g, h);
    lifted.push_back(g);
    current = h;
  }
  lifted.push_back(current);

  const std::size_t r = lifted.size();
  for (std::uint32_t mask = 1; mask + 1 < (1u << r); ++mask) {
    if (std::popcount(mask) * 2 > static_cast<int>(r)) continue;
    zp::BigPoly g{1};
    for (std::size_t i = 0; i < r; ++i)
      if (mask & (1u << i)) g = zp::big_mul(g, lifted[i], pn);
    for (auto& c : g)
      if (c > pn / 2) c -= pn;
    if (divides_over_z(f, g)) return false;
  }
  return true;
}

// ---------------------------------------------------------------- intervals

struct Interval {
  Rational lo, hi;
};

Interval imul(const Interval& a, const Interval& b) {
  Rational c[4] = {a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi};
  return {*std::min_element(c, c + 4), *std::max_element(c, c + 4)};
}

Interval ihorner(const QVec& a, const Interval& x) {
  Interval r{0, 0};
  for (std::size_t i = a.size(); i-- > 0;) {
    r = imul(r, x);
    r.lo += a[i];
    r.hi += a[i];
  }
  return r;
}

std::string default_name(unsigned i) {
  if (i == 0) return "1";
  if (i == 1) return "t";
  return "t^" + std::to_string(i);
}

std::string label_or_q(const std::string& s) { return s.empty() ? "K" : s; }

}  // namespace

// ================================================================ NumberField

NumberField NumberField::create(NumberFieldSpec spec) {
  auto d = std::make_shared<NumberFieldData>();
  d->label = label_or_q(spec.label);
  require(spec.poly.size() >= 2, d->label + ": defining polynomial has degree 0");
  require(spec.poly.back() == 1, d->label + ": defining polynomial must be monic");
  const unsigned m = static_cast<unsigned>(spec.poly.size() - 1);
  require(m <= 6, d->label + ": degree above 6 is not supported");
  d->m = m;
  d->poly = spec.poly;
  require(irreducible_over_q(d->poly), d->label + ": defining polynomial is reducible");

  // Galois generator.
  QVec g = spec.galois;
  if (g.empty()) {
    require(m == 1, d->label + ": missing Galois action");
    g = {Rational(0)};
  }
  require(g.size() <= m, d->label + ": Galois action has too many coefficients");
  g = reduce_mod(g, d->poly);
  d->galois = g;
  d->galois_powers.push_back(reduce_mod({Rational(1)}, d->poly));
  for (unsigned i = 1; i < m; ++i)
    d->galois_powers.push_back(reduce_mod(qmul(d->galois_powers.back(), g), d->poly));
  {
    QVec fg(m, Rational(0));
    QVec gpow = d->galois_powers[0];
    for (unsigned i = 0; i <= m; ++i) {
      for (unsigned j = 0; j < m; ++j) fg[j] += Rational(d->poly[i]) * gpow[j];
      gpow = reduce_mod(qmul(gpow, g), d->poly);
    }
    require(std::all_of(fg.begin(), fg.end(), [](const Rational& r) { return r == 0; }),
            d->label + ": Galois action does not map theta to a root");
    QVec theta = reduce_mod({Rational(0), Rational(1)}, d->poly);
    QVec cur = theta;
    for (unsigned i = 1; i <= m; ++i) {
      QVec next(m, Rational(0));
      for (unsigned j = 0; j < m; ++j)
        for (unsigned k = 0; k < m; ++k) next[k] += cur[j] * d->galois_powers[j][k];
      cur = next;
      require((cur == theta) == (i == m),
              d->label + ": Galois orbit of theta does not have size " + std::to_string(m));
    }
  }

  // Integral basis.
  QMat B = spec.integral_basis;
  if (B.empty()) {
    B.assign(m, QVec(m, Rational(0)));
    for (unsigned i = 0; i < m; ++i) B[i][i] = 1;
  }
  require(B.size() == m, d->label + ": integral basis needs " + std::to_string(m) + " elements");
  for (auto& b : B) {
    require(b.size() <= m, d->label + ": integral basis element too long");
    b = reduce_mod(b, d->poly);
    require(all_integer(charpoly_of(mult_matrix(b, d->poly))),
            d->label + ": integral basis element is not an algebraic integer");
  }
  auto Binv = q_inverse(B);
  require(Binv.has_value(), d->label + ": integral basis is singular");
  for (const auto& row : *Binv)
    require(all_integer(row), d->label + ": integral basis does not contain Z[theta]");
  Rational det = abs(q_det(B));
  d->index = numerator(Rational(1) / det);
  require(numerator(det) == 1,
          d->label + ": integral basis has non-integral index");
  d->integral_basis = B;

  // Real embeddings.
  auto roots = real_roots(d->poly);
  require(spec.totally_real == (roots.size() == m),
          d->label + (spec.totally_real ? ": field is not totally real"
                                        : ": field is totally real but not declared so"));
  d->totally_real = spec.totally_real;
  d->real_roots = roots;

  // Display basis.
  if (spec.display_basis.empty()) {
    d->display_basis.assign(m, QVec(m, Rational(0)));
    for (unsigned i = 0; i < m; ++i) d->display_basis[i][i] = 1;
  } else {
    require(spec.display_basis.size() == m, d->label + ": display basis needs " + std::to_string(m) + " elements");
    for (auto& b : spec.display_basis) d->display_basis.push_back(reduce_mod(b, d->poly));
  }
  auto Dinv = q_inverse(d->display_basis);
  require(Dinv.has_value(), d->label + ": display basis is singular");
  d->display_inverse = *Dinv;
  if (spec.display_names.empty()) {
    for (unsigned i = 0; i < m; ++i) d->display_names.push_back(default_name(i));
  } else {
    require(spec.display_names.size() == m, d->label + ": display names do not match the degree");
    d->display_names = spec.display_names;
  }

  NumberField k(d);
  for (auto& u : spec.units) {
    require(u.size() <= m, d->label + ": unit has too many coefficients");
    NFElem e(k, reduce_mod(u, d->poly));
    require(e.is_integral() && abs(e.norm()) == 1, d->label + ": unit " + e.to_string() + " is not a unit");
    d->units.push_back(e.coeffs());
  }
  return k;
}

NumberField NumberField::rationals() {
  static const NumberField q = [] {
    NumberFieldSpec s;
    s.label = "Q";
    s.poly = {Integer(0), Integer(1)};
    s.galois = {Rational(0)};
    s.totally_real = true;
    return create(s);
  }();
  return q;
}

const std::string& NumberField::label() const { return d_->label; }
unsigned NumberField::degree() const { return d_->m; }
const std::vector<Integer>& NumberField::poly() const { return d_->poly; }
bool NumberField::totally_real() const { return d_->totally_real; }
const Integer& NumberField::index() const { return d_->index; }

std::vector<NFElem> NumberField::units() const {
  std::vector<NFElem> r;
  for (const auto& u : d_->units) r.emplace_back(*this, u);
  return r;
}

std::vector<NFElem> NumberField::integral_basis() const {
  std::vector<NFElem> r;
  for (const auto& b : d_->integral_basis) r.emplace_back(*this, b);
  return r;
}

NFElem NumberField::element(std::vector<Rational> c) const { return NFElem(*this, std::move(c)); }
NFElem NumberField::from_int(long long n) const { return NFElem(*this, {Rational(n)}); }
NFElem NumberField::theta() const { return NFElem(*this, {Rational(0), Rational(1)}); }

NFElem NumberField::from_display(const std::vector<Rational>& coords) const {
  require(coords.size() == d_->m, d_->label + ": expected " + std::to_string(d_->m) + " display coordinates");
  return NFElem(*this, row_times(coords, d_->display_basis));
}

// ================================================================ NFElem

NFElem::NFElem(NumberField f, std::vector<Rational> c)
    : field_(std::move(f)), c_(reduce_mod(std::move(c), field_.poly())) {}

NFElem NFElem::operator+(const NFElem& o) const {
  require(field_.same_as(o.field_), "number field mismatch");
  QVec r = c_;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += o.c_[i];
  return NFElem(field_, r);
}

NFElem NFElem::operator-(const NFElem& o) const { return *this + (-o); }

NFElem NFElem::operator-() const {
  QVec r = c_;
  for (auto& x : r) x = -x;
  return NFElem(field_, r);
}

NFElem NFElem::operator*(const NFElem& o) const {
  require(field_.same_as(o.field_), "number field mismatch");
  return NFElem(field_, qmul(c_, o.c_));
}

NFElem NFElem::scaled(const Rational& r) const {
  QVec v = c_;
  for (auto& x : v) x *= r;
  return NFElem(field_, v);
}

NFElem NFElem::inverse() const {
  if (is_zero()) throw Error(ErrorKind::InvalidArgument, "inverse of zero");
  // Solve M x = e_0 where M is multiplication by this element.
  auto Minv = q_inverse(mult_matrix(c_, field_.poly()));
  require(Minv.has_value(), "inverse: singular multiplication map");
  QVec x(c_.size(), Rational(0));
  for (std::size_t i = 0; i < x.size(); ++i) x[i] = (*Minv)[i][0];
  return NFElem(field_, x);
}

NFElem NFElem::pow(unsigned e) const {
  NFElem r = field_.from_int(1), b = *this;
  while (e) {
    if (e & 1) r = r * b;
    b = b * b;
    e >>= 1;
  }
  return r;
}

NFElem NFElem::galois(unsigned times) const {
  const auto& d = field_.data();
  QVec cur = c_;
  for (unsigned t = 0; t < times % d.m; ++t) {
    QVec next(d.m, Rational(0));
    for (unsigned j = 0; j < d.m; ++j) {
      if (cur[j] == 0) continue;
      for (unsigned k = 0; k < d.m; ++k) next[k] += cur[j] * d.galois_powers[j][k];
    }
    cur = next;
  }
  return NFElem(field_, cur);
}

std::vector<NFElem> NFElem::conjugates() const {
  std::vector<NFElem> r{*this};
  for (unsigned i = 1; i < field_.degree(); ++i) r.push_back(r.back().galois());
  return r;
}

Rational NFElem::norm() const { return q_det(mult_matrix(c_, field_.poly())); }

Rational NFElem::trace() const {
  auto M = mult_matrix(c_, field_.poly());
  Rational t = 0;
  for (std::size_t i = 0; i < M.size(); ++i) t += M[i][i];
  return t;
}

bool NFElem::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const Rational& r) { return r == 0; });
}

bool NFElem::is_rational() const {
  return std::all_of(c_.begin() + 1, c_.end(), [](const Rational& r) { return r == 0; });
}

bool NFElem::is_integral() const { return all_integer(charpoly()); }

std::vector<Rational> NFElem::charpoly() const {
  return charpoly_of(mult_matrix(c_, field_.poly()));
}

std::vector<Rational> NFElem::display_coords() const {
  return row_times(c_, field_.data().display_inverse);
}

std::string NFElem::to_string() const {
  const auto& d = field_.data();
  QVec coords = display_coords();
  Integer den = lcm_denominators(coords);
  std::string s;
  int terms = 0;
  for (std::size_t i = 0; i < coords.size(); ++i) {
    Integer k = numerator(coords[i] * Rational(den));
    if (k == 0) continue;
    ++terms;
    const std::string& name = d.display_names[i];
    std::string term;
    if (name == "1") {
      term = odisc::to_string(Integer(abs(k)));
    } else {
      term = (abs(k) == 1 ? std::string() : odisc::to_string(Integer(abs(k)))) + name;
    }
    if (k < 0)
      s += "-" + term;
    else
      s += (s.empty() ? "" : "+") + term;
  }
  if (s.empty()) return "0";
  if (den == 1) return s;
  if (terms == 1) return s + "/" + odisc::to_string(den);
  return "(" + s + ")/" + odisc::to_string(den);
}

NormAndConjugates norm_and_galois(const NFElem& a) {
  NormAndConjugates r;
  r.conjugates = a.conjugates();
  NFElem prod = a.field().from_int(1);
  for (const auto& c : r.conjugates) prod = prod * c;
  require(prod.is_rational(), "norm: product of conjugates is not rational");
  r.norm = prod.coeffs()[0];
  return r;
}

bool is_totally_positive(const NFElem& a) {
  const auto& d = a.field().data();
  require(d.totally_real, d.label + ": total positivity needs a totally real field");
  if (a.is_zero()) fail("total positivity of zero");
  QVec f = to_q(d.poly);
  for (auto [lo, hi] : d.real_roots) {
    int s_lo = sign(eval(f, lo));
    for (;;) {
      Interval v = ihorner(a.coeffs(), {lo, hi});
      if (v.lo > 0) break;
      if (v.hi < 0) return false;
      require(lo != hi, "total positivity: element vanishes at a real embedding");
      Rational mid = (lo + hi) / 2;
      int s = sign(eval(f, mid));
      if (s == 0) {
        lo = hi = mid;
      } else if (s == s_lo) {
        lo = mid;
      } else {
        hi = mid;
      }
    }
  }
  return true;
}

std::optional<NFElem> square_root(const NFElem& a) {
  const NumberField& k = a.field();
  const auto& d = k.data();
  require(d.totally_real, d.label + ": square roots need a totally real field");
  if (a.is_zero()) return a;
  if (!is_totally_positive(a)) return std::nullopt;
  // Cheap exact disproof: a nonsquare residue at a small prime.
  for (std::uint32_t p = 3; p < 60; p += 2) {
    if (!is_prime(p) || d.index % p == 0 || std::pow(double(p), double(d.m)) > 1e6) continue;
    for (const auto& P : factor_prime(k, p)) {
      UnitResidue u = unit_residue(P, a);
      if (u.valuation % 2 != 0 || (u.valuation == 0 && !is_square(u.residue)))
        return std::nullopt;
    }
  }
  // b = D^2 a is integral, so its root lies in (1/index) Z[theta].
  const Integer den = lcm_denominators(a.coeffs());
  const NFElem b = a.scaled(Rational(den * den));
  const unsigned m = d.m;
  const QVec f = to_q(d.poly);
  std::vector<long double> roots;
  for (auto [lo, hi] : d.real_roots) {
    const int s_lo = sign(eval(f, lo));
    while (hi - lo > Rational(1, Integer(1) << 90)) {
      Rational mid = (lo + hi) / 2;
      int s = sign(eval(f, mid));
      if (s == 0) lo = hi = mid;
      else (s == s_lo ? lo : hi) = mid;
    }
    roots.push_back(static_cast<long double>(((lo + hi) / 2).convert_to<long double>()));
  }
  std::vector<long double> bv(m);
  for (unsigned i = 0; i < m; ++i) {
    long double acc = 0;
    for (unsigned j = m; j-- > 0;) acc = acc * roots[i] + b.coeffs()[j].convert_to<long double>();
    bv[i] = std::sqrt(std::max(acc, 0.0L));
  }
  const long double idx = d.index.convert_to<long double>();
  for (std::uint64_t signs = 0; signs < (std::uint64_t{1} << (m - 1)); ++signs) {
    // Vandermonde system sum_j c_j r_i^j = +-sqrt(b(r_i)).
    std::vector<std::vector<long double>> A(m, std::vector<long double>(m + 1));
    for (unsigned i = 0; i < m; ++i) {
      long double pw = 1;
      for (unsigned j = 0; j < m; ++j, pw *= roots[i]) A[i][j] = pw;
      A[i][m] = (i > 0 && (signs >> (i - 1)) & 1) ? -bv[i] : bv[i];
    }
    for (unsigned c = 0; c < m; ++c) {
      unsigned piv = c;
      for (unsigned r = c + 1; r < m; ++r)
        if (std::fabs(A[r][c]) > std::fabs(A[piv][c])) piv = r;
      std::swap(A[c], A[piv]);
      for (unsigned r = 0; r < m; ++r)
        if (r != c) {
          const long double t = A[r][c] / A[c][c];
          for (unsigned j = c; j <= m; ++j) A[r][j] -= t * A[c][j];
        }
    }
    std::vector<Rational> y(m);
    bool near = true;
    for (unsigned j = 0; j < m && near; ++j) {
      const long double x = A[j][m] / A[j][j] * idx;
      if (!(std::fabs(x) < 1e15L))
        throw Error(ErrorKind::BudgetExceeded,
                    "square root of " + a.to_string() + ": coordinates exceed long double range");
      const long double r = std::round(x);
      near = std::fabs(x - r) < 1e-3L;
      y[j] = Rational(Integer(static_cast<long long>(r)), d.index);
    }
    if (!near) continue;
    const NFElem root(k, y);
    if ((root * root - b).is_zero()) return root.scaled(Rational(Integer(1), den));
  }
  throw Error(ErrorKind::BudgetExceeded,
              "square root of " + a.to_string() + ": long double precision exhausted");
}

const char* to_string(SplittingType t) {
  switch (t) {
    case SplittingType::Split: return "split";
    case SplittingType::Inert: return "inert";
    case SplittingType::Ramified: return "ramified";
  }
  return "?";
}

// ================================================================ PrimeIdeal

namespace {

std::shared_ptr<detail::PrimeIdealData> make_ideal(const NumberField& k, std::uint32_t p,
                                                   const zp::Poly& h, unsigned e,
                                                   const std::string& label) {
  auto d = std::make_shared<detail::PrimeIdealData>(k);
  d->p = p;
  d->factor_poly = h;
  d->f = static_cast<unsigned>(h.size() - 1);
  d->e = e;
  d->label = label;
  d->residue = make_field(p, d->f, h);
  return d;
}

void require_not_index_divisor(const NumberField& k, std::uint32_t p) {
  require(is_prime(p), std::to_string(p) + " is not prime");
  require(k.index() % p != 0, k.label() + ": " + std::to_string(p) +
                                  " divides the index of Z[theta]; no ideal from factors mod p");
}

unsigned precision_for(unsigned v) {
  unsigned n = 8;
  while (n < v) n *= 2;
  return n;
}

// Integral numerator and integer denominator of a.
std::pair<std::vector<Integer>, Integer> split_denominator(const NFElem& a) {
  Integer den = lcm_denominators(a.coeffs());
  std::vector<Integer> num;
  for (const auto& c : a.coeffs()) num.push_back(numerator(c * Rational(den)));
  return {num, den};
}

// Upper bound on v_P(x) for nonzero integral x.
unsigned valuation_bound(const detail::PrimeIdealData& d, const std::vector<Integer>& x) {
  NFElem xe(d.field, QVec(x.begin(), x.end()));
  Integer n = numerator(Rational(abs(xe.norm())));
  return p_valuation(n, d.p) / d.f + 1;
}

template <typename Fn>
auto with_precision(const detail::PrimeIdealData& d, unsigned need, Fn fn) {
  unsigned prec = precision_for(need);
  for (;;) {
    try {
      return fn(*d.ring(prec));
    } catch (const detail::PrecisionExhausted&) {
      prec *= 2;
    }
  }
}

}  // namespace

PrimeIdeal PrimeIdeal::create(const NumberField& k, const PrimeIdealSpec& spec) {
  require_not_index_divisor(k, spec.p);
  const std::int64_t p = spec.p;
  zp::Poly h;
  for (auto c : spec.factor_poly) h.push_back(((c % p) + p) % p);
  zp::trim(h);
  require(h.size() >= 2 && h.back() == 1,
          spec.label + ": factor polynomial must be monic of positive degree mod p");
  require(is_irreducible_mod_p(h, spec.p), spec.label + ": factor polynomial is reducible mod p");
  zp::Poly fp = zp::reduce(k.poly(), p);
  unsigned e = 0;
  for (;;) {
    auto [q, r] = zp::divmod(fp, h, p);
    if (!zp::is_zero(r)) break;
    fp = q;
    ++e;
  }
  require(e > 0, spec.label + ": factor polynomial does not divide the defining polynomial mod p");
  auto d = make_ideal(k, spec.p, h, e, spec.label.empty() ? std::to_string(p) : spec.label);
  PrimeIdeal ideal(d);
  if (spec.generator) {
    NFElem g(k, *spec.generator);
    require(g.is_integral(), d->label + ": generator is not integral");
    Integer pf = 1;
    for (unsigned i = 0; i < d->f; ++i) pf *= p;
    require(abs(g.norm()) == Rational(pf),
            d->label + ": generator norm " + odisc::to_string(g.norm()) + " is not +-" + odisc::to_string(pf));
    require(valuation(ideal, g) == 1, d->label + ": generator does not lie in this ideal");
    if (k.totally_real())
      require(is_totally_positive(g), d->label + ": generator is not totally positive");
    d->generator = g;
  }
  return ideal;
}

const NumberField& PrimeIdeal::field() const { return d_->field; }
std::uint32_t PrimeIdeal::p() const { return d_->p; }
const std::vector<std::int64_t>& PrimeIdeal::factor_poly() const { return d_->factor_poly; }
unsigned PrimeIdeal::residue_degree() const { return d_->f; }
unsigned PrimeIdeal::ramification_index() const { return d_->e; }
const std::string& PrimeIdeal::label() const { return d_->label; }
const std::optional<NFElem>& PrimeIdeal::generator() const { return d_->generator; }
const FiniteField& PrimeIdeal::residue_field() const { return d_->residue; }

std::vector<PrimeIdeal> factor_prime(const NumberField& k, std::uint32_t p) {
  require_not_index_divisor(k, p);
  auto fac = zp::factor(zp::reduce(k.poly(), p), p);
  std::vector<PrimeIdeal> out;
  unsigned total = 0;
  for (std::size_t i = 0; i < fac.size(); ++i) {
    const auto& [h, e] = fac[i];
    total += e * static_cast<unsigned>(h.size() - 1);
    PrimeIdealSpec s;
    s.label = std::to_string(p) + "." + std::to_string(i + 1);
    s.p = p;
    s.factor_poly = h;
    out.push_back(PrimeIdeal::create(k, s));
  }
  require(total == k.degree(), "factor_prime: sum of e*f differs from the degree");
  return out;
}

UnitResidue unit_residue(const PrimeIdeal& ideal, const NFElem& a) {
  const auto& d = ideal.data();
  require(a.field().same_as(d.field), "unit_residue: element from another field");
  if (a.is_zero()) fail("valuation of zero");
  const auto nd = split_denominator(a);
  const std::vector<Integer>& num = nd.first;
  const std::vector<Integer> dv{nd.second};
  unsigned need = std::max(valuation_bound(d, num), valuation_bound(d, dv)) + 3;
  return with_precision(d, need, [&](const detail::LocalRing& R) {
    detail::LocalElem x = R.from_integral(num), y = R.from_integral(dv);
    unsigned vx = R.strip(x, ~0u), vy = R.strip(y, ~0u);
    const FiniteField& F = d.residue;
    UnitResidue r;
    r.valuation = static_cast<int>(vx) - static_cast<int>(vy);
    r.residue = FieldElement(F, F.div(R.residue(x), R.residue(y)));
    return r;
  });
}

int valuation(const PrimeIdeal& ideal, const NFElem& a) { return unit_residue(ideal, a).valuation; }

FieldElement residue_map(const PrimeIdeal& ideal, const NFElem& a) {
  const auto& F = ideal.residue_field();
  if (a.is_zero()) return FieldElement(F, F.zero());
  UnitResidue u = unit_residue(ideal, a);
  require(u.valuation >= 0, ideal.label() + ": element " + a.to_string() + " is not integral at the ideal");
  if (u.valuation > 0) return FieldElement(F, F.zero());
  return u.residue;
}

SplittingType splitting_type(const PrimeIdeal& ideal, const NFElem& delta) {
  if (delta.is_zero()) fail("splitting type of zero");
  const auto& d = ideal.data();
  if (!ideal.is_dyadic()) {
    UnitResidue u = unit_residue(ideal, delta);
    if (u.valuation % 2 != 0) return SplittingType::Ramified;
    return is_square(u.residue) ? SplittingType::Split : SplittingType::Inert;
  }
  const Integer den = lcm_denominators(delta.coeffs());
  // delta * den^2 is integral and in the same square class.
  NFElem x = delta.scaled(Rational(den) * Rational(den));
  std::vector<Integer> xc;
  for (const auto& c : x.coeffs()) xc.push_back(numerator(c));
  const auto& tables = d.dyadic();
  unsigned need = valuation_bound(d, xc) + tables.s + 3;
  return with_precision(d, need, [&](const detail::LocalRing& R) {
    detail::LocalElem u = R.from_integral(xc);
    unsigned v = R.strip(u, ~0u);
    if (v % 2 != 0) return SplittingType::Ramified;
    auto key = detail::digit_key(R, u, tables.s);
    if (tables.squares.count(key)) return SplittingType::Split;
    if (tables.ext_squares.count(key)) return SplittingType::Inert;
    return SplittingType::Ramified;
  });
}

}  // namespace odisc
