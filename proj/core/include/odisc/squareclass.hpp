// Copyright 2026 The odisc Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "odisc/numfield.hpp"

namespace odisc {

/// Declared generators delta_1..delta_t of a group of square classes of K.
class GeneratorList {
 public:
  /// Checks every generator is nonzero and totally positive (totally real
  /// K), and certifies GF(2)-independence modulo squares by residue symbols
  /// at auxiliary non-dyadic primes. t <= 30.
  static std::shared_ptr<const GeneratorList> create(
      const NumberField& k, std::vector<std::string> names,
      std::vector<NFElem> generators);

  const NumberField& field() const { return field_; }
  std::size_t size() const { return gens_.size(); }
  const NFElem& at(std::size_t i) const { return gens_[i]; }
  const std::string& name(std::size_t i) const { return names_[i]; }
  /// Auxiliary ideals whose residue-symbol rows have rank t.
  const std::vector<PrimeIdeal>& certificate() const { return certificate_; }

 private:
  GeneratorList(NumberField k) : field_(std::move(k)) {}
  NumberField field_;
  std::vector<std::string> names_;
  std::vector<NFElem> gens_;
  std::vector<PrimeIdeal> certificate_;
};

/// sign * prod delta_i^(bit i), a class in K^x / (K^x)^2.
class NFSquareClass {
 public:
  NFSquareClass(std::shared_ptr<const GeneratorList> gens, std::uint64_t bits,
                int sign = 1);

  const GeneratorList& generators() const { return *gens_; }
  std::uint64_t bits() const { return bits_; }
  int sign() const { return sign_; }

  NFElem representative() const;
  /// canonical_representative(representative()).
  NFElem canonical() const;
  std::string to_string() const;
  /// "-1*2*p7", "1" for the empty product.
  std::string product_string() const;

  NFSquareClass operator*(const NFSquareClass& o) const;
  friend bool operator==(const NFSquareClass& a, const NFSquareClass& b) {
    return a.gens_ == b.gens_ && a.bits_ == b.bits_ && a.sign_ == b.sign_;
  }

 private:
  std::shared_ptr<const GeneratorList> gens_;
  std::uint64_t bits_;
  int sign_;
};

/// a * r^2 for the returned factor r.
struct CanonicalForm {
  NFElem value;
  NFElem factor;
};

/// Preferred representative of the square class of a != 0. Candidates are
/// a * (w r)^2 for w in the group of declared units and r rational, scaled
/// so the display coordinates are integers with squarefree content. The key
/// is |trace|, then trace of the square, then display coordinates
/// lexicographically. Classes of mixed sign skip the trace.
/// Square factors that are neither rational nor units are kept.
CanonicalForm canonical_representative(const NFElem& a);

/// Residue of a unit at a non-dyadic ideal is a nonsquare (1) or square (0),
/// with the valuation parity in `odd_valuation`. Multiplicative in a.
struct ResidueSymbol {
  bool odd_valuation = false;
  bool nonsquare = false;
};
ResidueSymbol residue_symbol(const PrimeIdeal& ideal, const NFElem& a);

}  // namespace odisc
