// Copyright 2026 The odisc Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "odisc/quadform.hpp"

namespace odisc {

/// Frobenius-Schur indicator: +, o, -.
enum class Indicator { Plus, Circle, Minus };
Indicator parse_indicator(const std::string& s);
const char* to_string(Indicator i);
OType parse_otype(const std::string& s);

struct DefectInfo {
  unsigned defect = 0;
  bool exceptional = false;
};

struct OrdinaryCharacter {
  std::string id;
  std::uint64_t degree = 0;
  Indicator indicator = Indicator::Plus;
  std::string field_label;
  /// chi, sigma(chi), sigma^2(chi), ... for the generator sigma of the
  /// field's Galois group; empty for rational characters.
  std::vector<std::string> galois_orbit;
  std::map<std::uint32_t, DefectInfo> defects;
};

struct BrauerCharacter {
  std::string id;
  std::uint64_t degree = 0;
  Indicator indicator = Indicator::Plus;
  std::uint32_t p = 0;
  /// GF(p^field_degree) is the character field.
  unsigned field_degree = 1;
  std::optional<std::string> dual_partner;
  /// Indicator o only: degree of the field of psi + psi^dual, which is
  /// field_degree or field_degree / 2.
  unsigned pair_field_degree = 0;
  bool is_trivial = false;
  /// Members of one Galois orbit over GF(p) share this label (default: id).
  std::string orbit;
};

struct Constituent {
  BrauerCharacter brauer;
  unsigned multiplicity = 0;
};

/// Decomposition of ordinary characters modulo one prime ideal.
class DecompositionTable {
 public:
  DecompositionTable(std::string ideal, std::uint32_t p,
                     std::vector<BrauerCharacter> brauer);

  const std::string& ideal() const { return ideal_; }
  std::uint32_t p() const { return p_; }
  const std::vector<BrauerCharacter>& brauer() const { return brauer_; }
  const BrauerCharacter& brauer(const std::string& id) const;

  /// `field_degree` is the degree of the character field of the reduction
  /// over GF(p) when known.
  void add_row(const std::string& ordinary_id,
               const std::map<std::string, unsigned>& multiplicities,
               std::optional<unsigned> field_degree = std::nullopt);
  bool has_row(const std::string& ordinary_id) const;
  std::optional<unsigned> row_field_degree(const std::string& ordinary_id) const;

  /// Constituents in Brauer table order; checks the degree sum.
  std::vector<Constituent> reduce(const OrdinaryCharacter& chi) const;

 private:
  struct Row {
    std::vector<unsigned> mult;
    std::optional<unsigned> field_degree;
  };
  std::string ideal_;
  std::uint32_t p_;
  std::vector<BrauerCharacter> brauer_;
  std::map<std::string, std::size_t> index_;
  std::map<std::string, Row> rows_;
};

struct StabilityResult {
  bool stable = true;
  /// Odd-degree indicator + constituents.
  std::vector<std::string> witnesses;
};

/// Throws on a multiset that is not self-dual.
StabilityResult is_orthogonally_stable(const std::vector<Constituent>& c);

enum class SummandKind { PlusIrreducible, DualPair, MinusDoubled };
const char* to_string(SummandKind k);

/// One orthogonally simple summand, summed over its Galois orbit over the
/// character field of the reduction.
struct OrthSummand {
  SummandKind kind = SummandKind::PlusIrreducible;
  std::vector<std::string> members;
  std::uint64_t degree = 0;      // total
  std::uint64_t psi_degree = 0;  // one absolutely irreducible constituent
  /// PlusIrreducible: field of psi. DualPair: field of psi + psi^dual.
  /// MinusDoubled: field of psi.
  unsigned field_degree = 1;
  unsigned pair_field_ratio = 1;
  std::optional<OType> type;
};

/// Groups a stable multiset into orthogonally simple summands. `k` is the
/// degree of the character field of the whole reduction; `known` gives the
/// types of indicator + constituents (looked up by id, then orbit).
std::vector<OrthSummand> split_orthogonally_simple(
    const std::vector<Constituent>& c, unsigned k,
    const std::map<std::string, OType>& known = {});

/// Parity rule combining the summands over GF(p^k).
OType modular_discriminant(const std::vector<OrthSummand>& summands, unsigned k);

/// One line per summand: "4352 (+, O+) -> O+".
std::vector<std::string> describe(const std::vector<OrthSummand>& summands, unsigned k);

}  // namespace odisc
