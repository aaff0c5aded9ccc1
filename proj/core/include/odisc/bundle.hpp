// Copyright 2026 The odisc Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "odisc/chardata.hpp"
#include "odisc/invform.hpp"
#include "odisc/numfield.hpp"
#include "odisc/quadform.hpp"
#include "odisc/solver.hpp"
#include "odisc/squareclass.hpp"

namespace odisc {

/// A prime ideal of a character field. Conjugate ideals are sigma^j of a
/// base ideal that carries the decomposition data.
/// Labels are unique per field.
struct IdealEntry {
  PrimeIdeal ideal;
  std::string field;
  std::string label;
  std::string base;  // own label unless conjugate
  unsigned sigma_power = 0;
};

/// Map key of an ideal: "field|label".
inline std::string ideal_key(const std::string& field, const std::string& label) {
  return field + "|" + label;
}

struct ExplicitFact {
  std::string character;
  std::string ideal;
  bool stable = false;
  std::optional<OType> type;
  std::optional<bool> odd_degree;
  std::string source;
};

/// Everything known about one group, as loaded from a bundle file.
struct GroupBundle {
  std::string name;
  std::map<std::uint32_t, unsigned> order;
  std::map<std::string, NumberField> fields;
  std::vector<std::string> ideal_order;  // keys
  std::map<std::string, IdealEntry> ideals;  // by ideal_key
  std::vector<OrdinaryCharacter> characters;
  std::map<std::string, DecompositionTable> decompositions;  // by ideal_key
  std::map<std::string, std::map<std::string, OType>> modular_discs;  // by ideal_key
  std::map<std::string, std::shared_ptr<const GeneratorList>> generators;  // by field
  std::vector<ExplicitFact> facts;
  /// Published discriminants, printed form, by character id.
  std::map<std::string, std::string> expected;

  const OrdinaryCharacter& character(const std::string& id) const;
  const IdealEntry& ideal(const std::string& field, const std::string& label) const;
  bool divides_order(std::uint32_t p) const { return order.count(p) != 0; }
};

/// Throws Error(InvalidArgument) naming the JSON path of the first problem.
GroupBundle parse_bundle(const std::string& json_text, const std::string& origin = "bundle");
GroupBundle load_bundle(const std::string& path);

QuadraticForm parse_form(const std::string& json_text, const std::string& origin = "form");
QuadraticForm load_form(const std::string& path);
MatrixRep parse_rep(const std::string& json_text, const std::string& origin = "rep");
MatrixRep load_rep(const std::string& path);

/// Reduction of an ordinary character modulo one ideal of its field.
struct Reduction {
  std::string ideal;
  /// The decomposition row read: sigma^-j(chi) at the base ideal.
  std::string row;
  std::vector<Constituent> constituents;
  StabilityResult stability;
  unsigned field_degree = 1;
  std::vector<OrthSummand> summands;
  std::optional<OType> type;
  /// Missing constituent types when `type` is empty.
  std::vector<std::string> unknown;
};

/// nullopt when no decomposition row covers (chi, ideal). The ideal is
/// looked up in the field of chi.
std::optional<Reduction> reduce(const GroupBundle& b, const std::string& chi,
                                const std::string& ideal);

/// Decomposition-derived facts merged with explicit ones, in ideal order.
std::vector<ConstraintFact> derive_facts(const GroupBundle& b, const std::string& chi);

/// Checks the character is orthogonally stable (indicator +, even degree).
SolveReport solve_character(const GroupBundle& b, const std::string& chi);

/// Parses printed elements such as "357+68sqrt21" or "29-18c19-9c19'"
/// over the display names of k.
NFElem parse_display(const NumberField& k, const std::string& text);

/// Survivors equal to the published value of chi up to squares. Empty when
/// chi has no published value.
std::vector<std::uint64_t> matching_expected(const GroupBundle& b, const std::string& chi,
                                             const CandidateSet& c);

}  // namespace odisc
