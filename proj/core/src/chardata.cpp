// Copyright 2026 The odisc Authors
// SPDX-License-Identifier: Apache-2.0

#include "odisc/chardata.hpp"

#include <numeric>
#include <set>

#include "odisc/error.hpp"

namespace odisc {

Indicator parse_indicator(const std::string& s) {
  if (s == "+") return Indicator::Plus;
  if (s == "o") return Indicator::Circle;
  if (s == "-") return Indicator::Minus;
  fail("indicator must be \"+\", \"o\" or \"-\", got \"" + s + "\"");
}

const char* to_string(Indicator i) {
  switch (i) {
    case Indicator::Plus: return "+";
    case Indicator::Circle: return "o";
    case Indicator::Minus: return "-";
  }
  return "?";
}

OType parse_otype(const std::string& s) {
  if (s == "O+") return OType::Plus;
  if (s == "O-") return OType::Minus;
  fail("orthogonal type must be \"O+\" or \"O-\", got \"" + s + "\"");
}

const char* to_string(SummandKind k) {
  switch (k) {
    case SummandKind::PlusIrreducible: return "plus-irreducible";
    case SummandKind::DualPair: return "dual-pair";
    case SummandKind::MinusDoubled: return "minus-doubled";
  }
  return "?";
}

DecompositionTable::DecompositionTable(std::string ideal, std::uint32_t p,
                                       std::vector<BrauerCharacter> brauer)
    : ideal_(std::move(ideal)), p_(p), brauer_(std::move(brauer)) {
  for (std::size_t i = 0; i < brauer_.size(); ++i) {
    auto& b = brauer_[i];
    const std::string where = "decomposition " + ideal_ + ", Brauer character " + b.id;
    require(index_.emplace(b.id, i).second, where + ": duplicate id");
    require(b.degree > 0, where + ": degree must be positive");
    require(b.p == p_, where + ": characteristic differs from the table");
    require(b.field_degree >= 1, where + ": field degree must be positive");
    if (b.orbit.empty()) b.orbit = b.id;
    if (b.is_trivial) {
      require(b.degree == 1, where + ": trivial character of degree != 1");
      if (p_ == 2) b.indicator = Indicator::Plus;
    }
    if (b.indicator == Indicator::Circle) {
      require(b.dual_partner.has_value(), where + ": indicator o needs a dual partner");
      require(b.pair_field_degree == b.field_degree ||
                  2 * b.pair_field_degree == b.field_degree,
              where + ": pair field degree must be the field degree or half of it");
    }
  }
  for (const auto& b : brauer_) {
    if (!b.dual_partner) continue;
    auto it = index_.find(*b.dual_partner);
    require(it != index_.end(),
            "decomposition " + ideal_ + ": dual partner " + *b.dual_partner + " of " + b.id +
                " is not in the table");
    const auto& d = brauer_[it->second];
    require(d.indicator == Indicator::Circle && d.dual_partner == b.id &&
                d.degree == b.degree,
            "decomposition " + ideal_ + ": " + b.id + " and " + d.id +
                " are not a consistent dual pair");
  }
}

const BrauerCharacter& DecompositionTable::brauer(const std::string& id) const {
  auto it = index_.find(id);
  require(it != index_.end(), "decomposition " + ideal_ + ": unknown Brauer character " + id);
  return brauer_[it->second];
}

void DecompositionTable::add_row(const std::string& ordinary_id,
                                 const std::map<std::string, unsigned>& multiplicities,
                                 std::optional<unsigned> field_degree) {
  Row row;
  row.mult.assign(brauer_.size(), 0);
  for (const auto& [id, m] : multiplicities) {
    auto it = index_.find(id);
    require(it != index_.end(), "decomposition " + ideal_ + ", row " + ordinary_id +
                                    ": unknown Brauer character " + id);
    row.mult[it->second] = m;
  }
  row.field_degree = field_degree;
  require(rows_.emplace(ordinary_id, std::move(row)).second,
          "decomposition " + ideal_ + ": duplicate row " + ordinary_id);
}

bool DecompositionTable::has_row(const std::string& ordinary_id) const {
  return rows_.count(ordinary_id) != 0;
}

std::optional<unsigned> DecompositionTable::row_field_degree(
    const std::string& ordinary_id) const {
  auto it = rows_.find(ordinary_id);
  require(it != rows_.end(), "decomposition " + ideal_ + ": no row " + ordinary_id);
  return it->second.field_degree;
}

std::vector<Constituent> DecompositionTable::reduce(const OrdinaryCharacter& chi) const {
  auto it = rows_.find(chi.id);
  require(it != rows_.end(), "decomposition " + ideal_ + ": no row " + chi.id);
  std::vector<Constituent> out;
  std::uint64_t total = 0;
  for (std::size_t i = 0; i < brauer_.size(); ++i) {
    const unsigned m = it->second.mult[i];
    if (m == 0) continue;
    out.push_back({brauer_[i], m});
    total += m * brauer_[i].degree;
  }
  require(total == chi.degree, "decomposition " + ideal_ + ", row " + chi.id +
                                   ": constituent degrees sum to " + std::to_string(total) +
                                   ", not " + std::to_string(chi.degree));
  return out;
}

namespace {

void require_self_dual(const std::vector<Constituent>& c) {
  std::map<std::string, unsigned> mult;
  for (const auto& x : c) mult[x.brauer.id] += x.multiplicity;
  for (const auto& x : c) {
    if (x.brauer.indicator != Indicator::Circle) continue;
    require(x.brauer.dual_partner.has_value(),
            "constituent " + x.brauer.id + " of indicator o has no dual partner");
    auto it = mult.find(*x.brauer.dual_partner);
    require(it != mult.end() && it->second == mult[x.brauer.id],
            "not self-dual: " + x.brauer.id + " occurs " + std::to_string(mult[x.brauer.id]) +
                " times but its dual " + *x.brauer.dual_partner + " does not match");
  }
}

unsigned gcdu(unsigned a, unsigned b) { return std::gcd(a, b); }

const std::string& orbit_of(const BrauerCharacter& b) {
  return b.orbit.empty() ? b.id : b.orbit;
}

}  // namespace

StabilityResult is_orthogonally_stable(const std::vector<Constituent>& c) {
  require_self_dual(c);
  StabilityResult r;
  for (const auto& x : c) {
    if (x.multiplicity == 0) continue;
    if (x.brauer.indicator == Indicator::Plus && x.brauer.degree % 2 == 1) {
      r.stable = false;
      r.witnesses.push_back(x.brauer.id);
    }
  }
  return r;
}

std::vector<OrthSummand> split_orthogonally_simple(const std::vector<Constituent>& c,
                                                   unsigned k,
                                                   const std::map<std::string, OType>& known) {
  require(k >= 1, "character field degree must be positive");
  auto st = is_orthogonally_stable(c);
  require(st.stable, "reduction is not orthogonally stable (constituent " +
                         (st.witnesses.empty() ? std::string() : st.witnesses.front()) + ")");

  struct Group {
    std::vector<const Constituent*> members;
    unsigned count = 0;
  };
  std::map<std::string, Group> plus, pairs;
  std::vector<OrthSummand> out;

  for (const auto& x : c) {
    if (x.multiplicity == 0) continue;
    const auto& b = x.brauer;
    switch (b.indicator) {
      case Indicator::Plus: {
        auto& g = plus[orbit_of(b)];
        g.members.push_back(&x);
        g.count += x.multiplicity;
        break;
      }
      case Indicator::Circle: {
        // Key the pair by the smaller orbit label of psi and its dual.
        std::string key = orbit_of(b);
        for (const auto& y : c)
          if (y.brauer.id == *b.dual_partner) key = std::min(key, orbit_of(y.brauer));
        auto& g = pairs[key];
        g.members.push_back(&x);
        g.count += x.multiplicity;
        break;
      }
      case Indicator::Minus: {
        require(x.multiplicity % 2 == 0,
                "constituent " + b.id + " of indicator - has odd multiplicity " +
                    std::to_string(x.multiplicity));
        for (unsigned i = 0; i < x.multiplicity / 2; ++i) {
          OrthSummand s;
          s.kind = SummandKind::MinusDoubled;
          s.members = {b.id, b.id};
          s.degree = 2 * b.degree;
          s.psi_degree = b.degree;
          s.field_degree = b.field_degree;
          out.push_back(std::move(s));
        }
        break;
      }
    }
  }

  for (const auto& [orbit, g] : plus) {
    const auto& b0 = g.members.front()->brauer;
    for (const auto* m : g.members)
      require(m->brauer.field_degree == b0.field_degree && m->brauer.degree == b0.degree,
              "Galois orbit " + orbit + ": members differ in degree or field");
    const unsigned fp = b0.field_degree, size = fp / gcdu(k, fp);
    require(g.count % size == 0,
            "Galois orbit " + orbit + ": " + std::to_string(g.count) +
                " constituents do not form orbits of length " + std::to_string(size) +
                " over GF(p^" + std::to_string(k) + ")");
    std::optional<OType> type;
    for (const auto* m : g.members) {
      auto it = known.find(m->brauer.id);
      if (it == known.end()) continue;
      require(!type || *type == it->second,
              "Galois orbit " + orbit + ": conjugates with different discriminants");
      type = it->second;
    }
    if (!type) {
      auto it = known.find(orbit);
      if (it != known.end()) type = it->second;
    }
    std::vector<std::string> ids;
    for (const auto* m : g.members) ids.push_back(m->brauer.id);
    for (unsigned i = 0; i < g.count / size; ++i) {
      OrthSummand s;
      s.kind = SummandKind::PlusIrreducible;
      s.members = ids;
      s.degree = std::uint64_t(size) * b0.degree;
      s.psi_degree = b0.degree;
      s.field_degree = fp;
      s.type = type;
      out.push_back(s);
    }
  }

  for (const auto& [orbit, g] : pairs) {
    const auto& b0 = g.members.front()->brauer;
    for (const auto* m : g.members)
      require(m->brauer.pair_field_degree == b0.pair_field_degree &&
                  m->brauer.degree == b0.degree,
              "dual pairs in orbit " + orbit + " differ in degree or field");
    const unsigned fp = b0.pair_field_degree, size = fp / gcdu(k, fp);
    const unsigned npairs = g.count / 2;
    require(npairs % size == 0, "dual pairs in orbit " + orbit +
                                    " do not form Galois orbits over GF(p^" +
                                    std::to_string(k) + ")");
    std::vector<std::string> ids;
    for (const auto* m : g.members) ids.push_back(m->brauer.id);
    for (unsigned i = 0; i < npairs / size; ++i) {
      OrthSummand s;
      s.kind = SummandKind::DualPair;
      s.members = ids;
      s.degree = 2ull * size * b0.degree;
      s.psi_degree = b0.degree;
      s.field_degree = fp;
      s.pair_field_ratio = b0.field_degree / fp;
      out.push_back(s);
    }
  }

  std::uint64_t total = 0, expected = 0;
  for (const auto& s : out) total += s.degree;
  for (const auto& x : c) expected += x.multiplicity * x.brauer.degree;
  require(total == expected, "summand degrees do not add up to the character degree");
  return out;
}

namespace {

bool contributes_minus(const OrthSummand& s, unsigned k) {
  const bool odd_ext = (k / gcdu(k, s.field_degree)) % 2 == 1;
  switch (s.kind) {
    case SummandKind::PlusIrreducible:
      require(s.type.has_value(), "no orthogonal discriminant given for constituent " +
                                      (s.members.empty() ? std::string() : s.members.front()));
      return *s.type == OType::Minus && odd_ext;
    case SummandKind::DualPair:
      return s.pair_field_ratio == 2 && s.psi_degree % 2 == 1 && odd_ext;
    case SummandKind::MinusDoubled:
      return false;
  }
  return false;
}

std::string join(const std::vector<std::string>& v) {
  std::set<std::string> seen;
  std::string s;
  for (const auto& x : v) {
    if (!seen.insert(x).second) continue;
    if (!s.empty()) s += "+";
    s += x;
  }
  return s;
}

}  // namespace

OType modular_discriminant(const std::vector<OrthSummand>& summands, unsigned k) {
  require(k >= 1, "character field degree must be positive");
  bool minus = false;
  for (const auto& s : summands) minus ^= contributes_minus(s, k);
  return minus ? OType::Minus : OType::Plus;
}

std::vector<std::string> describe(const std::vector<OrthSummand>& summands, unsigned k) {
  std::vector<std::string> out;
  for (const auto& s : summands) {
    std::string line = join(s.members) + " (" + to_string(s.kind) + ", degree " +
                       std::to_string(s.degree) + ", field GF(p^" +
                       std::to_string(s.field_degree) + ")";
    if (s.type) line += std::string(", ") + to_string(*s.type);
    line += std::string(") -> ") + (contributes_minus(s, k) ? "O-" : "O+");
    out.push_back(std::move(line));
  }
  return out;
}

}  // namespace odisc
