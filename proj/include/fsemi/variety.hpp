#pragma once

#include <optional>
#include <string>

#include "fsemi/field.hpp"
#include "fsemi/radical.hpp"
#include "fsemi/semigroup.hpp"

namespace fsemi {

enum class VarietyTag {
  Trivial, Sl, Band, Com, Groups, Ab, Gp, AbK, DK, SlJoinAbK,
  DS, DA, DO, DOcapAbBar, LGK, LI, EGbarP, A, DGbarP, DGpMalAbKcapEGbarP,
};

/// A named variety, possibly carrying a field or prime parameter.
struct VarietyId {
  VarietyTag tag;
  std::optional<FieldSpec> field;
  std::optional<unsigned> prime;

  /// Grammar: bare names ("Sl", "DA", "DS", "DO", "LI", "A", "Com", "Band",
  /// "Groups", "Ab", "Trivial", "DOcapAbBar"), field-parameterized
  /// "AbK@F4", "DK@Q", "SlJoinAbK@F2", "LGK@F2", "DOcapAbBar@Q",
  /// "DGpMalAbKcapEGbar@F4", prime-parameterized "Gp@2", "EGbar@2",
  /// "DGbar@3".
  static VarietyId parse(const std::string& text);
  std::string str() const;
};

struct Membership {
  bool member = false;
  std::string witness;  // empty when member; first failing object otherwise

  explicit operator bool() const { return member; }
};

Membership variety_member(const FiniteSemigroup& s, const VarietyId& id);

/// Representability flags over a field, decided structurally through the
/// Rhodes radical.  Witnesses are kept for the failing flags.
struct RepReport {
  bool diagonalizable = false;
  bool unidiagonalizable = false;
  bool triangularizable = false;
  bool unitriangularizable = false;
  bool basic = false;
  bool split_basic = false;
  std::string witness_diagonalizable;
  std::string witness_unidiagonalizable;
  std::string witness_triangularizable;
  std::string witness_unitriangularizable;
  std::string witness_basic;
};

RepReport classify_representability(const FiniteSemigroup& s, const FieldSpec& field);

}  // namespace fsemi
