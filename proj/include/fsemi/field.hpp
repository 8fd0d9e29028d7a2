#pragma once

#include <string>
#include <vector>

#include "fsemi/errors.hpp"

namespace fsemi {

/// Symbolic description of a ground field: only the characteristic and the
/// splitting behaviour of x^e - 1 are ever consumed.
class FieldSpec {
 public:
  enum class Kind { Q, R, C, Fq, FbarP, Custom };

  static FieldSpec Q() { return FieldSpec(Kind::Q, 0, 0); }
  static FieldSpec R() { return FieldSpec(Kind::R, 0, 0); }
  static FieldSpec C() { return FieldSpec(Kind::C, 0, 0); }
  static FieldSpec Fq(unsigned q);
  static FieldSpec Fbar(unsigned p);
  /// A user-supplied (characteristic, split exponents) pair.  The exponent
  /// set must contain 1, be divisor- and lcm-closed, and avoid multiples of
  /// the characteristic.
  static FieldSpec custom(unsigned characteristic, std::vector<unsigned> split_exponents);

  /// Grammar: "Q" | "R" | "C" | "F"<q> | "Fbar"<p>.
  static FieldSpec parse(const std::string& text);

  Kind kind() const { return kind_; }
  unsigned characteristic() const { return char_; }
  /// Field size for Fq, otherwise 0.
  unsigned q() const { return q_; }

  /// Whether x^e - 1 splits into e distinct linear factors.
  bool splits(unsigned e) const;

  std::string str() const;

  bool operator==(const FieldSpec& o) const {
    return kind_ == o.kind_ && char_ == o.char_ && q_ == o.q_ &&
           split_exponents_ == o.split_exponents_;
  }

 private:
  FieldSpec(Kind k, unsigned characteristic, unsigned q)
      : kind_(k), char_(characteristic), q_(q) {}

  Kind kind_;
  unsigned char_;
  unsigned q_;
  std::vector<unsigned> split_exponents_;  // Custom only
};

bool is_prime(unsigned n);
/// Returns the prime p when n = p^k, otherwise 0.
unsigned prime_power_base(unsigned n);

}  // namespace fsemi
