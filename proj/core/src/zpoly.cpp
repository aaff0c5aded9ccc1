// Copyright 2026 The odisc Authors
// SPDX-License-Identifier: Apache-2.0

#include "zpoly.hpp"

#include <algorithm>
#include <random>

#include "odisc/error.hpp"

namespace odisc::zp {

namespace {

std::int64_t md(std::int64_t a, std::int64_t p) {
  a %= p;
  return a < 0 ? a + p : a;
}

std::int64_t mulmod(std::int64_t a, std::int64_t b, std::int64_t p) {
  return static_cast<std::int64_t>((__int128(a) * b) % p);
}

}  // namespace

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

bool is_zero(const Poly& a) {
  return std::all_of(a.begin(), a.end(), [](std::int64_t c) { return c == 0; });
}

std::int64_t inv_mod(std::int64_t a, std::int64_t p) {
  a = md(a, p);
  require(a != 0, "inverse of zero modulo " + std::to_string(p));
  std::int64_t r = 1, e = p - 2;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

Poly reduce(const std::vector<Integer>& a, std::int64_t p) {
  Poly r;
  for (const auto& c : a) r.push_back(static_cast<std::int64_t>(mod_floor(c, p)));
  trim(r);
  return r;
}

Poly add(const Poly& a, const Poly& b, std::int64_t p) {
  Poly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = md(r[i] + b[i], p);
  trim(r);
  return r;
}

Poly sub(const Poly& a, const Poly& b, std::int64_t p) {
  Poly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = md(r[i] - b[i], p);
  trim(r);
  return r;
}

Poly mul(const Poly& a, const Poly& b, std::int64_t p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      r[i + j] = md(r[i + j] + mulmod(a[i], b[j], p), p);
  }
  trim(r);
  return r;
}

Poly scale(const Poly& a, std::int64_t c, std::int64_t p) {
  Poly r;
  for (auto x : a) r.push_back(mulmod(x, md(c, p), p));
  trim(r);
  return r;
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b, std::int64_t p) {
  Poly bb = b;
  trim(bb);
  require(!bb.empty(), "polynomial division by zero");
  Poly r = a;
  trim(r);
  if (r.size() < bb.size()) return {{}, r};
  const std::int64_t li = inv_mod(bb.back(), p);
  Poly q(r.size() - bb.size() + 1, 0);
  for (std::size_t k = r.size(); k-- >= bb.size();) {
    std::int64_t c = mulmod(r[k], li, p);
    q[k - bb.size() + 1] = c;
    if (c != 0)
      for (std::size_t i = 0; i < bb.size(); ++i) {
        std::size_t idx = k - bb.size() + 1 + i;
        r[idx] = md(r[idx] - mulmod(c, bb[i], p), p);
      }
    if (k == 0) break;
  }
  trim(q);
  trim(r);
  return {q, r};
}

Poly rem(const Poly& a, const Poly& b, std::int64_t p) { return divmod(a, b, p).second; }

Poly monic(const Poly& a, std::int64_t p) {
  Poly r = a;
  trim(r);
  if (r.empty()) return r;
  return scale(r, inv_mod(r.back(), p), p);
}

Poly gcd(Poly a, Poly b, std::int64_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = rem(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a, p);
}

Poly ext_gcd(const Poly& a, const Poly& b, std::int64_t p, Poly& s, Poly& t) {
  Poly r0 = a, r1 = b;
  trim(r0);
  trim(r1);
  Poly s0{1}, s1{}, t0{}, t1{1};
  while (!r1.empty()) {
    auto [q, r] = divmod(r0, r1, p);
    Poly s2 = sub(s0, mul(q, s1, p), p);
    Poly t2 = sub(t0, mul(q, t1, p), p);
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.empty()) {
    s = s0;
    t = t0;
    return r0;
  }
  std::int64_t li = inv_mod(r0.back(), p);
  s = scale(s0, li, p);
  t = scale(t0, li, p);
  return scale(r0, li, p);
}

Poly powmod(Poly base, const Integer& e, const Poly& m, std::int64_t p) {
  Poly r{1};
  r = rem(r, m, p);
  base = rem(base, m, p);
  if (e == 0) return r;
  const unsigned bits = static_cast<unsigned>(msb(e)) + 1;
  for (unsigned i = bits; i-- > 0;) {
    r = rem(mul(r, r, p), m, p);
    if (bit_test(e, i)) r = rem(mul(r, base, p), m, p);
  }
  return r;
}

Poly derivative(const Poly& a, std::int64_t p) {
  Poly r;
  for (std::size_t i = 1; i < a.size(); ++i)
    r.push_back(mulmod(a[i], static_cast<std::int64_t>(i % p), p));
  trim(r);
  return r;
}

namespace {

void squarefree(const Poly& f, std::int64_t p, unsigned mult,
                std::vector<std::pair<Poly, unsigned>>& out) {
  if (f.size() <= 1) return;
  Poly c = gcd(f, derivative(f, p), p);
  Poly w = divmod(f, c, p).first;
  unsigned i = 1;
  while (w.size() > 1) {
    Poly y = gcd(w, c, p);
    Poly fac = divmod(w, y, p).first;
    if (fac.size() > 1) out.emplace_back(monic(fac, p), i * mult);
    w = y;
    c = divmod(c, y, p).first;
    ++i;
  }
  if (c.size() > 1) {
    // c is a polynomial in x^p; in GF(p) the p-th root of a coefficient is itself.
    Poly root;
    for (std::size_t k = 0; k < c.size(); k += static_cast<std::size_t>(p))
      root.push_back(c[k]);
    squarefree(root, p, mult * static_cast<unsigned>(p), out);
  }
}

void equal_degree(const Poly& g, std::size_t d, std::int64_t p,
                  std::mt19937_64& rng, std::vector<Poly>& out) {
  const std::size_t n = g.size() - 1;
  if (n == d) {
    out.push_back(g);
    return;
  }
  Integer pd = 1;
  for (std::size_t i = 0; i < d; ++i) pd *= p;
  std::uniform_int_distribution<std::int64_t> dist(0, p - 1);
  while (true) {
    Poly a(n);
    for (auto& c : a) c = dist(rng);
    trim(a);
    if (a.size() <= 1) continue;
    Poly b;
    if (p == 2) {
      Poly t = a;
      b = a;
      for (std::size_t i = 1; i < d; ++i) {
        t = rem(mul(t, t, p), g, p);
        b = add(b, t, p);
      }
    } else {
      b = sub(powmod(a, (pd - 1) / 2, g, p), Poly{1}, p);
    }
    Poly u = gcd(b, g, p);
    if (u.size() > 1 && u.size() < g.size()) {
      equal_degree(u, d, p, rng, out);
      equal_degree(monic(divmod(g, u, p).first, p), d, p, rng, out);
      return;
    }
  }
}

}  // namespace

std::vector<std::pair<Poly, unsigned>> factor(const Poly& a, std::int64_t p) {
  Poly f = monic(a, p);
  require(!f.empty(), "factor: zero polynomial");
  std::vector<std::pair<Poly, unsigned>> sqf, out;
  squarefree(f, p, 1, sqf);
  std::mt19937_64 rng(0x5eed);
  for (auto& [g0, mult] : sqf) {
    Poly g = g0;
    Poly x{0, 1};
    Poly h = x;
    for (std::size_t d = 1; g.size() > 1; ++d) {
      if (2 * d > g.size() - 1) {
        out.emplace_back(g, mult);
        break;
      }
      h = powmod(h, Integer(p), g, p);
      Poly fac = gcd(sub(h, x, p), g, p);
      if (fac.size() > 1) {
        std::vector<Poly> parts;
        equal_degree(fac, d, p, rng, parts);
        for (auto& q : parts) out.emplace_back(q, mult);
        g = divmod(g, fac, p).first;
        h = rem(h, g, p);
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const auto& l, const auto& r) {
    if (l.first.size() != r.first.size()) return l.first.size() < r.first.size();
    return l.first < r.first;
  });
  return out;
}

BigPoly to_big(const Poly& a) {
  BigPoly r;
  for (auto c : a) r.emplace_back(c);
  return r;
}

BigPoly big_mul(const BigPoly& a, const BigPoly& b, const Integer& m) {
  if (a.empty() || b.empty()) return {};
  BigPoly r(a.size() + b.size() - 1, Integer(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  for (auto& c : r) c = mod_floor(c, m);
  return r;
}

BigPoly big_rem(BigPoly a, const BigPoly& b, const Integer& m) {
  const std::size_t db = b.size() - 1;
  for (std::size_t k = a.size(); k-- > db;) {
    Integer c = mod_floor(a[k], m);
    a[k] = 0;
    if (c == 0) continue;
    for (std::size_t i = 0; i < db; ++i) a[k - db + i] -= c * b[i];
  }
  if (a.size() > db) a.resize(db);
  for (auto& c : a) c = mod_floor(c, m);
  return a;
}

BigPoly big_div(BigPoly a, const BigPoly& b, const Integer& m) {
  const std::size_t db = b.size() - 1;
  if (a.size() <= db) return {};
  BigPoly q(a.size() - db, Integer(0));
  for (std::size_t k = a.size(); k-- > db;) {
    Integer c = mod_floor(a[k], m);
    q[k - db] = c;
    a[k] = 0;
    if (c == 0) continue;
    for (std::size_t i = 0; i < db; ++i) a[k - db + i] -= c * b[i];
  }
  return q;
}

void hensel_lift(const BigPoly& f, Poly g0, Poly h0, std::int64_t p, unsigned n,
                 BigPoly& g, BigPoly& h) {
  Poly s, t;
  Poly one = ext_gcd(g0, h0, p, s, t);
  require(one == Poly{1}, "hensel_lift: factors are not coprime mod p");
  g = to_big(g0);
  h = to_big(h0);
  Integer pk = p;
  for (unsigned k = 1; k < n; ++k) {
    Integer pk1 = pk * p;
    BigPoly gh = big_mul(g, h, pk1);
    BigPoly e(std::max(f.size(), gh.size()), Integer(0));
    for (std::size_t i = 0; i < f.size(); ++i) e[i] += f[i];
    for (std::size_t i = 0; i < gh.size(); ++i) e[i] -= gh[i];
    Poly ep;
    for (auto& c : e) {
      Integer r = mod_floor(c, pk1);
      require(r % pk == 0, "hensel_lift: input is not a factorization mod p");
      ep.push_back(static_cast<std::int64_t>(r / pk));
    }
    trim(ep);
    Poly dg = rem(mul(t, ep, p), g0, p);
    Poly dh = divmod(sub(ep, mul(h0, dg, p), p), g0, p).first;
    if (g.size() < dg.size()) g.resize(dg.size(), Integer(0));
    for (std::size_t i = 0; i < dg.size(); ++i) g[i] = mod_floor(g[i] + pk * dg[i], pk1);
    if (h.size() < dh.size()) h.resize(dh.size(), Integer(0));
    for (std::size_t i = 0; i < dh.size(); ++i) h[i] = mod_floor(h[i] + pk * dh[i], pk1);
    pk = pk1;
  }
}

}  // namespace odisc::zp
