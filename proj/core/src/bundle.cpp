// Copyright 2026 The odisc Authors
// SPDX-License-Identifier: Apache-2.0

#include "odisc/bundle.hpp"

#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "odisc/error.hpp"

namespace odisc {

namespace {

using json = nlohmann::json;

// A JSON value together with its path, for error messages.
class Node {
 public:
  Node(const json& j, std::string path, const std::string& origin)
      : j_(&j), path_(std::move(path)), origin_(&origin) {}

  [[noreturn]] void error(const std::string& what) const {
    fail(*origin_ + ": " + (path_.empty() ? "/" : path_) + ": " + what);
  }

  const json& raw() const { return *j_; }
  const std::string& path() const { return path_; }
  bool has(const std::string& key) const { return j_->is_object() && j_->contains(key); }

  Node operator[](const std::string& key) const {
    if (!j_->is_object()) error("expected an object");
    auto it = j_->find(key);
    if (it == j_->end()) error("missing key \"" + key + "\"");
    return Node(*it, path_ + "/" + key, *origin_);
  }
  Node at(std::size_t i) const { return Node((*j_)[i], path_ + "/" + std::to_string(i), *origin_); }

  std::vector<Node> items() const {
    if (!j_->is_array()) error("expected an array");
    std::vector<Node> out;
    for (std::size_t i = 0; i < j_->size(); ++i) out.push_back(at(i));
    return out;
  }
  std::vector<std::pair<std::string, Node>> members() const {
    if (!j_->is_object()) error("expected an object");
    std::vector<std::pair<std::string, Node>> out;
    for (auto it = j_->begin(); it != j_->end(); ++it)
      out.emplace_back(it.key(), Node(it.value(), path_ + "/" + it.key(), *origin_));
    return out;
  }

  std::string str() const {
    if (!j_->is_string()) error("expected a string");
    return j_->get<std::string>();
  }
  bool boolean() const {
    if (!j_->is_boolean()) error("expected true or false");
    return j_->get<bool>();
  }
  std::int64_t integer() const {
    if (!j_->is_number_integer()) error("expected an integer");
    return j_->get<std::int64_t>();
  }
  std::uint64_t natural() const {
    const auto v = integer();
    if (v < 0) error("expected a non-negative integer");
    return static_cast<std::uint64_t>(v);
  }
  Rational rational() const {
    if (j_->is_number_integer()) return Rational(Integer(j_->get<std::int64_t>()));
    if (!j_->is_string()) error("expected an integer or a \"a/b\" string");
    try {
      return parse_rational(j_->get<std::string>());
    } catch (const std::exception&) {
      error("malformed rational \"" + j_->get<std::string>() + "\"");
    }
  }
  std::vector<Rational> rationals() const {
    std::vector<Rational> out;
    for (const auto& n : items()) out.push_back(n.rational());
    return out;
  }
  std::vector<std::int64_t> integers() const {
    std::vector<std::int64_t> out;
    for (const auto& n : items()) out.push_back(n.integer());
    return out;
  }

  template <class T>
  T optional(const std::string& key, T fallback, T (Node::*get)() const) const {
    return has(key) ? ((*this)[key].*get)() : fallback;
  }

 private:
  const json* j_;
  std::string path_;
  const std::string* origin_;
};

json parse_json(const std::string& text, const std::string& origin) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    fail(origin + ": malformed JSON (" + e.what() + ")");
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(path + ": cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Wraps library validation errors with the JSON path being processed.
template <class F>
auto at_path(const Node& n, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::InvalidArgument) throw;
    n.error(e.what());
  }
}

FiniteField parse_field(const Node& n) {
  const auto p = n["p"].natural();
  const auto k = n.optional<std::uint64_t>("k", 1, &Node::natural);
  std::optional<std::vector<std::int64_t>> modulus;
  if (n.has("modulus")) modulus = n["modulus"].integers();
  return at_path(n, [&] {
    require(p <= 0xffffffffu && k <= 64, "field too large");
    return make_field(static_cast<std::uint32_t>(p), static_cast<unsigned>(k), modulus);
  });
}

Elem parse_elem(const FiniteField& f, const Node& n) {
  if (n.raw().is_array()) {
    auto c = n.integers();
    return f.from_coeffs(c);
  }
  return f.from_int(n.integer());
}

FfMatrix parse_matrix(const FiniteField& f, std::size_t dim, const Node& n) {
  auto rows = n.items();
  if (rows.size() != dim) n.error("expected " + std::to_string(dim) + " rows");
  FfMatrix m(f, dim, dim);
  for (std::size_t i = 0; i < dim; ++i) {
    auto cols = rows[i].items();
    if (cols.size() != dim) rows[i].error("expected " + std::to_string(dim) + " entries");
    for (std::size_t j = 0; j < dim; ++j) m.at(i, j) = parse_elem(f, cols[j]);
  }
  return m;
}

NumberField parse_number_field(const Node& n) {
  NumberFieldSpec s;
  s.label = n["label"].str();
  for (auto c : n["poly"].integers()) s.poly.push_back(Integer(c));
  if (n.has("integral_basis"))
    for (const auto& b : n["integral_basis"].items()) s.integral_basis.push_back(b.rationals());
  if (n.has("galois")) s.galois = n["galois"].rationals();
  s.totally_real = n.optional("totally_real", false, &Node::boolean);
  if (n.has("units"))
    for (const auto& u : n["units"].items()) s.units.push_back(u.rationals());
  if (n.has("display_basis"))
    for (const auto& b : n["display_basis"].items()) s.display_basis.push_back(b.rationals());
  if (n.has("display_names"))
    for (const auto& x : n["display_names"].items()) s.display_names.push_back(x.str());
  return at_path(n, [&] { return NumberField::create(s); });
}

// Power-basis coordinates, {"power": [...]}, or {"display": [...]}.
NFElem parse_element(const NumberField& k, const Node& n) {
  return at_path(n, [&] {
    if (n.raw().is_array()) return k.element(n.rationals());
    if (n.has("display")) return k.from_display(n["display"].rationals());
    if (n.has("power")) return k.element(n["power"].rationals());
    n.error("expected coordinates or {\"display\": [...]} / {\"power\": [...]}");
  });
}

NFElem poly_at_theta(const NumberField& k, const std::vector<std::int64_t>& h) {
  NFElem acc = k.from_int(0), t = k.theta();
  NFElem power = k.from_int(1);
  for (auto c : h) {
    acc = acc + power.scaled(Rational(Integer(c)));
    power = power * t;
  }
  return acc;
}

PrimeIdeal relabel(const NumberField& k, const PrimeIdeal& P, const std::string& label,
                   std::optional<std::vector<Rational>> generator = std::nullopt) {
  PrimeIdealSpec s;
  s.label = label;
  s.p = P.p();
  s.factor_poly = P.factor_poly();
  s.generator = std::move(generator);
  return PrimeIdeal::create(k, s);
}

PrimeIdeal prime_containing(const NumberField& k, std::uint32_t p, const NFElem& a,
                            const std::string& label) {
  std::optional<PrimeIdeal> found;
  for (const auto& P : factor_prime(k, p))
    if (valuation(P, a) > 0) {
      require(!found, label + ": " + a.to_string() + " lies in several primes over " +
                          std::to_string(p));
      found = P;
    }
  require(found.has_value(), label + ": no prime over " + std::to_string(p) + " contains " +
                                 a.to_string());
  return relabel(k, *found, label);
}

Indicator indicator_at(const Node& n) {
  return at_path(n, [&] { return parse_indicator(n.str()); });
}
OType otype_at(const Node& n) {
  return at_path(n, [&] { return parse_otype(n.str()); });
}

void parse_ideals(GroupBundle& b, const Node& list) {
  for (const auto& n : list.items()) {
    const std::string label = n["label"].str();
    const std::string field = n.has("field") ? n["field"].str() : "Q";
    if (!b.fields.count(field)) n["field"].error("unknown field \"" + field + "\"");
    if (b.ideals.count(ideal_key(field, label)))
      n["label"].error("duplicate ideal \"" + label + "\" over " + field);
    const NumberField& k = b.fields.at(field);
    std::string base = label;
    unsigned sigma_power = 0;
    std::optional<PrimeIdeal> ideal;
    if (n.has("conjugate_of")) {
      base = n["conjugate_of"].str();
      auto it = b.ideals.find(ideal_key(field, base));
      if (it == b.ideals.end()) n["conjugate_of"].error("unknown ideal \"" + base + "\"");
      if (it->second.base != base) n["conjugate_of"].error("\"" + base + "\" is itself a conjugate");
      const auto j = n["sigma_power"].natural();
      const PrimeIdeal& P0 = it->second.ideal;
      ideal = at_path(n, [&] {
        require(P0.residue_degree() == 1, label + ": conjugates need residue degree 1");
        const NFElem h = poly_at_theta(k, P0.factor_poly()).galois(static_cast<unsigned>(j));
        return prime_containing(k, P0.p(), h, label);
      });
      sigma_power = static_cast<unsigned>(j % k.degree());
    } else {
      const auto p = n["p"].natural();
      if (p > 0xffffffffu || !is_prime(p)) n["p"].error("expected a prime");
      const auto pp = static_cast<std::uint32_t>(p);
      std::optional<std::vector<Rational>> gen;
      if (n.has("generator")) gen = parse_element(k, n["generator"]).coeffs();
      ideal = at_path(n, [&] {
        if (n.has("factor_poly")) {
          PrimeIdealSpec s{label, pp, n["factor_poly"].integers(), gen};
          return PrimeIdeal::create(k, s);
        }
        if (n.has("contains"))
          return relabel(k, prime_containing(k, pp, parse_element(k, n["contains"]), label),
                         label, gen);
        if (gen) return relabel(k, prime_containing(k, pp, NFElem(k, *gen), label), label, gen);
        auto all = factor_prime(k, pp);
        require(all.size() == 1, label + ": " + std::to_string(all.size()) + " primes over " +
                                     std::to_string(pp) + "; give factor_poly or contains");
        return relabel(k, all[0], label);
      });
    }
    b.ideal_order.push_back(ideal_key(field, label));
    b.ideals.emplace(ideal_key(field, label), IdealEntry{*ideal, field, label, base, sigma_power});
  }
}

void parse_characters(GroupBundle& b, const Node& list) {
  std::set<std::string> ids;
  for (const auto& n : list.items()) {
    OrdinaryCharacter c;
    c.id = n["id"].str();
    if (!ids.insert(c.id).second) n["id"].error("duplicate character \"" + c.id + "\"");
    c.degree = n["degree"].natural();
    if (c.degree == 0) n["degree"].error("degree must be positive");
    c.indicator = n.has("indicator") ? indicator_at(n["indicator"]) : Indicator::Plus;
    c.field_label = n.has("field") ? n["field"].str() : "Q";
    if (!b.fields.count(c.field_label))
      n["field"].error("unknown field \"" + c.field_label + "\"");
    if (n.has("galois_orbit")) {
      for (const auto& x : n["galois_orbit"].items()) c.galois_orbit.push_back(x.str());
      const unsigned m = b.fields.at(c.field_label).degree();
      if (c.galois_orbit.size() != m || c.galois_orbit[0] != c.id)
        n["galois_orbit"].error("expected " + std::to_string(m) + " ids starting with " + c.id);
    }
    if (n.has("defects"))
      for (const auto& [key, d] : n["defects"].members()) {
        std::uint32_t p = 0;
        try {
          p = static_cast<std::uint32_t>(std::stoul(key));
        } catch (const std::exception&) {
          d.error("key must be a prime");
        }
        c.defects[p] = {static_cast<unsigned>(d["defect"].natural()),
                        d.optional("exceptional", false, &Node::boolean)};
      }
    b.characters.push_back(std::move(c));
  }
  for (std::size_t i = 0; i < b.characters.size(); ++i)
    for (const auto& id : b.characters[i].galois_orbit)
      if (!ids.count(id))
        list.at(i)["galois_orbit"].error("unknown character \"" + id + "\"");
}

void parse_decompositions(GroupBundle& b, const Node& list) {
  for (const auto& n : list.items()) {
    const std::string label = n["ideal"].str();
    const std::string field = n.has("field") ? n["field"].str() : "Q";
    const std::string key = ideal_key(field, label);
    auto it = b.ideals.find(key);
    if (it == b.ideals.end())
      n["ideal"].error("unknown ideal \"" + label + "\" over " + field);
    if (it->second.base != label)
      n["ideal"].error("decompositions belong to the base ideal " + it->second.base);
    if (b.decompositions.count(key)) n["ideal"].error("duplicate decomposition");
    const std::uint32_t p = it->second.ideal.p();
    std::vector<BrauerCharacter> brauer;
    for (const auto& x : n["brauer"].items()) {
      BrauerCharacter c;
      c.id = x["id"].str();
      c.degree = x["degree"].natural();
      c.indicator = indicator_at(x["indicator"]);
      c.p = p;
      c.field_degree = static_cast<unsigned>(x.optional<std::uint64_t>("field_degree", 1, &Node::natural));
      if (x.has("dual")) c.dual_partner = x["dual"].str();
      c.pair_field_degree =
          static_cast<unsigned>(x.optional<std::uint64_t>("pair_field_degree", 0, &Node::natural));
      c.is_trivial = x.optional("trivial", false, &Node::boolean);
      if (x.has("orbit")) c.orbit = x["orbit"].str();
      brauer.push_back(std::move(c));
    }
    DecompositionTable t = at_path(n["brauer"], [&] { return DecompositionTable(label, p, brauer); });
    std::map<std::string, unsigned> degrees;
    if (n.has("field_degrees"))
      for (const auto& [id, d] : n["field_degrees"].members())
        degrees[id] = static_cast<unsigned>(d.natural());
    for (const auto& [id, row] : n["matrix"].members()) {
      std::map<std::string, unsigned> mult;
      for (const auto& [bid, m] : row.members()) mult[bid] = static_cast<unsigned>(m.natural());
      std::optional<unsigned> fd;
      if (degrees.count(id)) fd = degrees.at(id);
      at_path(row, [&] {
        const OrdinaryCharacter& chi = b.character(id);
        t.add_row(id, mult, fd);
        t.reduce(chi);
        return 0;
      });
    }
    b.decompositions.emplace(key, std::move(t));
  }
}

void parse_modular_discs(GroupBundle& b, const Node& list) {
  for (const auto& n : list.items()) {
    const std::string label = n["ideal"].str();
    const std::string key = ideal_key(n.has("field") ? n["field"].str() : "Q", label);
    auto it = b.decompositions.find(key);
    if (it == b.decompositions.end())
      n["ideal"].error("no decomposition table for \"" + label + "\"");
    auto& discs = b.modular_discs[key];
    for (const auto& [bid, t] : n["discs"].members()) {
      at_path(t, [&] { return it->second.brauer(bid).degree; });
      discs[bid] = otype_at(t);
    }
  }
}

void parse_generators(GroupBundle& b, const Node& obj) {
  for (const auto& [field, list] : obj.members()) {
    auto it = b.fields.find(field);
    if (it == b.fields.end()) list.error("unknown field \"" + field + "\"");
    std::vector<std::string> names;
    std::vector<NFElem> elems;
    for (const auto& g : list.items()) {
      names.push_back(g["name"].str());
      elems.push_back(parse_element(it->second, g["element"]));
    }
    b.generators[field] =
        at_path(list, [&] { return GeneratorList::create(it->second, names, elems); });
  }
}

void parse_facts(GroupBundle& b, const Node& list) {
  std::set<std::pair<std::string, std::string>> seen;
  for (const auto& n : list.items()) {
    ExplicitFact f;
    f.character = n["character"].str();
    f.ideal = n["ideal"].str();
    const auto& chi = at_path(n["character"], [&]() -> const OrdinaryCharacter& {
      return b.character(f.character);
    });
    at_path(n["ideal"], [&] { return b.ideal(chi.field_label, f.ideal).sigma_power; });
    if (!seen.insert({f.character, f.ideal}).second) n.error("duplicate fact");
    f.stable = n["stable"].boolean();
    if (n.has("type")) f.type = otype_at(n["type"]);
    if (f.type && !f.stable) n["type"].error("a type needs a stable reduction");
    if (n.has("odd_degree")) f.odd_degree = n["odd_degree"].boolean();
    if (n.has("source")) f.source = n["source"].str();
    b.facts.push_back(std::move(f));
  }
}

}  // namespace

const OrdinaryCharacter& GroupBundle::character(const std::string& id) const {
  for (const auto& c : characters)
    if (c.id == id) return c;
  fail("unknown character \"" + id + "\"");
}

const IdealEntry& GroupBundle::ideal(const std::string& field, const std::string& label) const {
  auto it = ideals.find(ideal_key(field, label));
  if (it == ideals.end()) fail("unknown ideal \"" + label + "\" over " + field);
  return it->second;
}

GroupBundle parse_bundle(const std::string& text, const std::string& origin) {
  const json j = parse_json(text, origin);
  Node root(j, "", origin);
  GroupBundle b;
  b.name = root["name"].str();
  if (root.has("order"))
    for (const auto& [p, e] : root["order"].members()) {
      std::uint64_t pv = 0;
      try {
        pv = std::stoull(p);
      } catch (const std::exception&) {
        e.error("key must be a prime");
      }
      if (!is_prime(pv)) e.error("key must be a prime");
      b.order[static_cast<std::uint32_t>(pv)] = static_cast<unsigned>(e.natural());
    }
  b.fields.emplace("Q", NumberField::rationals());
  if (root.has("fields"))
    for (const auto& n : root["fields"].items()) {
      NumberField k = parse_number_field(n);
      if (!b.fields.emplace(k.label(), k).second) n["label"].error("duplicate field");
    }
  if (root.has("ideals")) parse_ideals(b, root["ideals"]);
  parse_characters(b, root["characters"]);
  if (root.has("generators")) parse_generators(b, root["generators"]);
  if (root.has("decompositions")) parse_decompositions(b, root["decompositions"]);
  if (root.has("modular_discs")) parse_modular_discs(b, root["modular_discs"]);
  if (root.has("facts")) parse_facts(b, root["facts"]);
  if (root.has("expected"))
    for (const auto& [id, v] : root["expected"].members()) {
      at_path(v, [&] { return b.character(id).degree; });
      b.expected[id] = v.str();
    }
  for (const auto& [key, e] : b.ideals)
    if (b.order.size() && !b.divides_order(e.ideal.p()))
      root["ideals"].error("ideal " + e.label + " lies over a prime not dividing the order");
  return b;
}

GroupBundle load_bundle(const std::string& path) { return parse_bundle(read_file(path), path); }

QuadraticForm parse_form(const std::string& text, const std::string& origin) {
  const json j = parse_json(text, origin);
  Node root(j, "", origin);
  const FiniteField f = parse_field(root["field"]);
  const std::size_t n = root["dim"].natural();
  const Node up = root["upper"];
  auto rows = up.items();
  if (rows.size() != n) up.error("expected " + std::to_string(n) + " rows");
  QuadraticForm q(f, n);
  for (std::size_t i = 0; i < n; ++i) {
    auto cols = rows[i].items();
    if (cols.size() != n) rows[i].error("expected " + std::to_string(n) + " entries");
    for (std::size_t c = 0; c < n; ++c) {
      const Elem e = parse_elem(f, cols[c]);
      if (c < i && e.v != 0) cols[c].error("entries below the diagonal must be 0");
      if (c >= i) q.set_coeff(i, c, e);
    }
  }
  return q;
}

QuadraticForm load_form(const std::string& path) { return parse_form(read_file(path), path); }

MatrixRep parse_rep(const std::string& text, const std::string& origin) {
  const json j = parse_json(text, origin);
  Node root(j, "", origin);
  const FiniteField f = parse_field(root["field"]);
  const std::size_t n = root["dim"].natural();
  std::vector<FfMatrix> gens;
  for (const auto& g : root["generators"].items()) gens.push_back(parse_matrix(f, n, g));
  return at_path(root["generators"], [&] { return MatrixRep::create(f, n, gens); });
}

MatrixRep load_rep(const std::string& path) { return parse_rep(read_file(path), path); }

std::optional<Reduction> reduce(const GroupBundle& b, const std::string& chi_id,
                                const std::string& label) {
  const OrdinaryCharacter& chi = b.character(chi_id);
  const IdealEntry& e = b.ideal(chi.field_label, label);
  const std::string base_key = ideal_key(e.field, e.base);
  auto t = b.decompositions.find(base_key);
  if (t == b.decompositions.end()) return std::nullopt;

  Reduction r;
  r.ideal = label;
  r.row = chi.id;
  if (e.sigma_power != 0) {
    require(!chi.galois_orbit.empty(),
            chi.id + ": needs a galois_orbit to read conjugate ideal " + label);
    const std::size_t m = chi.galois_orbit.size();
    r.row = chi.galois_orbit[(m - e.sigma_power % m) % m];
  }
  if (!t->second.has_row(r.row)) return std::nullopt;
  const OrdinaryCharacter& row_chi = b.character(r.row);
  r.constituents = t->second.reduce(row_chi);
  r.stability = is_orthogonally_stable(r.constituents);

  if (auto fd = t->second.row_field_degree(r.row)) {
    r.field_degree = *fd;
  } else if (r.constituents.size() == 1) {
    r.field_degree = r.constituents[0].brauer.field_degree;
  } else {
    require(e.ideal.residue_degree() == 1,
            "decomposition " + e.base + ", row " + r.row + ": field_degrees entry required");
    r.field_degree = 1;
  }
  if (!r.stability.stable) return r;

  std::map<std::string, OType> known;
  if (auto d = b.modular_discs.find(base_key); d != b.modular_discs.end()) known = d->second;
  r.summands = split_orthogonally_simple(r.constituents, r.field_degree, known);
  for (const auto& s : r.summands)
    if (s.kind == SummandKind::PlusIrreducible && !s.type) r.unknown.push_back(s.members.front());
  if (r.unknown.empty()) r.type = modular_discriminant(r.summands, r.field_degree);
  return r;
}

std::vector<ConstraintFact> derive_facts(const GroupBundle& b, const std::string& chi_id) {
  const OrdinaryCharacter& chi = b.character(chi_id);
  std::vector<ConstraintFact> out;
  for (const auto& key : b.ideal_order) {
    const IdealEntry& e = b.ideals.at(key);
    if (e.field != chi.field_label) continue;
    const std::string& label = e.label;
    ConstraintFact f{e.ideal, false, std::nullopt, false, std::nullopt, ""};
    bool have = false;
    const unsigned resdeg = e.ideal.residue_degree();
    if (auto r = reduce(b, chi_id, label)) {
      have = true;
      f.stable = r->stability.stable;
      f.type = r->type;
      f.odd_degree = (resdeg / r->field_degree) % 2 == 1;
      f.source = "decomposition of " + r->row + " at " + e.base;
    }
    for (const auto& x : b.facts) {
      if (x.character != chi_id || x.ideal != label) continue;
      if (have) {
        require(x.stable == f.stable, chi_id + " at " + label +
                                          ": explicit stability contradicts the decomposition");
        require(!x.type || !f.type || *x.type == *f.type,
                chi_id + " at " + label + ": explicit type contradicts the decomposition");
      } else {
        f.odd_degree = resdeg % 2 == 1;
      }
      f.stable = x.stable;
      if (x.type) f.type = x.type;
      if (x.odd_degree) f.odd_degree = *x.odd_degree;
      if (!x.source.empty()) f.source = f.source.empty() ? x.source : f.source + "; " + x.source;
      have = true;
    }
    if (!have) continue;
    auto d = chi.defects.find(e.ideal.p());
    if (d != chi.defects.end() && d->second.defect > 0 && e.ideal.p() != 2) f.cyclic = d->second;
    out.push_back(std::move(f));
  }
  return out;
}

SolveReport solve_character(const GroupBundle& b, const std::string& chi_id) {
  const OrdinaryCharacter& chi = b.character(chi_id);
  require(chi.indicator == Indicator::Plus && chi.degree % 2 == 0,
          chi_id + " is not orthogonally stable (needs indicator + and even degree)");
  auto g = b.generators.find(chi.field_label);
  require(g != b.generators.end(), "no generator list for field " + chi.field_label);
  SolveReport r = solve(chi.degree, g->second, derive_facts(b, chi_id));
  if (r.set.survivors.size() > 1)
    r.warnings.push_back("not determined by decomposition data");
  return r;
}

NFElem parse_display(const NumberField& k, const std::string& text) {
  std::vector<std::string> names;
  for (unsigned i = 0; i < k.degree(); ++i) {
    std::vector<Rational> e(k.degree(), Rational(0));
    e[i] = 1;
    names.push_back(k.from_display(e).to_string());
  }
  std::vector<Rational> coords(k.degree(), Rational(0));
  std::size_t pos = 0;
  auto bad = [&] { fail("cannot parse \"" + text + "\" over " + k.label()); };
  if (text.empty()) bad();
  if (text.front() == '(') {
    const auto close = text.rfind(")/");
    if (close == std::string::npos) bad();
    Rational den;
    try {
      den = parse_rational(text.substr(close + 2));
    } catch (const std::exception&) {
      bad();
    }
    if (den == 0) bad();
    return parse_display(k, text.substr(1, close - 1)).scaled(1 / den);
  }
  while (pos < text.size()) {
    int sgn = 1;
    if (text[pos] == '+' || text[pos] == '-') sgn = text[pos++] == '-' ? -1 : 1;
    const std::size_t start = pos;
    while (pos < text.size() && (std::isdigit(static_cast<unsigned char>(text[pos])) ||
                                 text[pos] == '/'))
      ++pos;
    Rational coeff = 1;
    if (pos > start) {
      try {
        coeff = parse_rational(text.substr(start, pos - start));
      } catch (const std::exception&) {
        bad();
      }
    }
    std::size_t best = 0, len = 0;
    for (std::size_t i = 1; i < names.size(); ++i)
      if (names[i].size() > len && text.compare(pos, names[i].size(), names[i]) == 0)
        best = i, len = names[i].size();
    if (len == 0 && pos == start) bad();
    if (text.compare(pos, 1, "*") == 0) bad();
    pos += len;
    coords[best] += sgn * coeff;
  }
  return k.from_display(coords);
}

std::vector<std::uint64_t> matching_expected(const GroupBundle& b, const std::string& chi_id,
                                             const CandidateSet& c) {
  auto it = b.expected.find(chi_id);
  if (it == b.expected.end()) return {};
  const NFElem want = parse_display(b.fields.at(b.character(chi_id).field_label), it->second);
  std::vector<std::uint64_t> out;
  for (auto bits : c.survivors)
    if (square_root(c.candidate(bits).representative() * want)) out.push_back(bits);
  return out;
}

}  // namespace odisc
