#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fsemi/errors.hpp"

namespace fsemi {

/// A partition of {0..n-1} into classes labelled by first occurrence, so
/// class_of[0] == 0 and each new class gets the next free id.
struct Partition {
  std::vector<int> class_of;
  int count = 0;

  Partition() = default;
  explicit Partition(std::vector<int> raw);

  int size() const { return static_cast<int>(class_of.size()); }
  bool same(int a, int b) const { return class_of[a] == class_of[b]; }
  std::vector<std::vector<int>> classes() const;

  /// Common refinement (meet in the congruence lattice).
  static Partition intersect(const Partition& a, const Partition& b);

  /// a ≤ b: every class of a is contained in a class of b.
  static bool refines(const Partition& a, const Partition& b);

  bool operator==(const Partition& o) const { return class_of == o.class_of; }
};

/// A finite semigroup given by its multiplication table.  Elements are the
/// dense indices 0..n-1.  Associativity is checked at construction, always.
class FiniteSemigroup {
 public:
  /// Empty placeholder; use the factories to build a real semigroup.
  FiniteSemigroup() = default;

  static FiniteSemigroup from_cayley_table(int order,
                                           std::vector<std::vector<int>> table,
                                           std::optional<int> identity = {});

  /// Closure of total maps on {0..degree-1} under left-to-right composition
  /// (q acted on by st is (q.s).t).  gen_words records a shortest word per
  /// element in breadth-first order.  If with_identity is set the identity
  /// map is adjoined as the monoid identity with the empty word.
  static FiniteSemigroup from_transformations(int degree,
                                              const std::vector<std::vector<int>>& generators,
                                              const std::vector<std::string>& labels,
                                              std::size_t cap = 100000,
                                              bool with_identity = false);

  int order() const { return order_; }
  int product(int s, int t) const { return table_[s][t]; }
  const std::vector<std::vector<int>>& table() const { return table_; }
  std::optional<int> identity() const { return identity_; }

  bool has_gen_words() const { return !gen_words_.empty(); }
  /// Word over generator indices for an element (only when built from
  /// transformations).
  const std::vector<int>& gen_word(int s) const { return gen_words_[s]; }
  const std::vector<std::string>& gen_labels() const { return gen_labels_; }
  std::string gen_word_string(int s) const;

  /// Underlying transformations when built from_transformations.
  const std::vector<std::vector<int>>& transformations() const { return transformations_; }

  bool is_idempotent(int s) const { return product(s, s) == s; }
  std::vector<int> idempotents() const;

  /// The unique two-sided zero, if present.
  std::optional<int> zero() const;

  int pow(int s, long long k) const;
  /// The idempotent power of s.
  int idempotent_power(int s) const;

 private:
  int order_ = 0;
  std::vector<std::vector<int>> table_;
  std::optional<int> identity_;
  std::vector<std::vector<int>> gen_words_;
  std::vector<std::string> gen_labels_;
  std::vector<std::vector<int>> transformations_;
};

/// Green's relations and the derived structure of a finite semigroup.
struct GreensStructure {
  Partition r, l, j, h;
  /// j_below[a][b] true iff J-class a lies ≤_J below J-class b.
  std::vector<std::vector<char>> j_below;
  std::vector<char> regular;   // per J-class id
  std::vector<int> idempotents;

  int r_of(int s) const { return r.class_of[s]; }
  int l_of(int s) const { return l.class_of[s]; }
  int j_of(int s) const { return j.class_of[s]; }
  int h_of(int s) const { return h.class_of[s]; }
};

/// A subgroup of a semigroup, carried by ambient element indices.
struct SubgroupTable {
  std::vector<int> carrier;          // sorted
  int identity = -1;
  std::vector<std::pair<int, int>> inverse;  // element -> inverse

  int size() const { return static_cast<int>(carrier.size()); }
  bool contains(int s) const;
  int inverse_of(int s) const;
};

/// A subsemigroup re-indexed as a FiniteSemigroup of its own, together with
/// the list of ambient elements (new index -> ambient index).
struct SubSemigroup {
  FiniteSemigroup sg;
  std::vector<int> elements;

  int ambient_of(int local) const { return elements[local]; }
  int local_of(int ambient) const;
};

FiniteSemigroup adjoin_identity(const FiniteSemigroup& s);

GreensStructure greens(const FiniteSemigroup& s);

SubgroupTable maximal_subgroup(const FiniteSemigroup& s, int e);
SubgroupTable maximal_subgroup(const FiniteSemigroup& s, const GreensStructure& g, int e);

SubSemigroup local_monoid(const FiniteSemigroup& s, int e);

/// Re-index a multiplicatively closed subset as its own semigroup.
SubSemigroup subsemigroup(const FiniteSemigroup& s, std::vector<int> elements);

/// The descending chain S ⊇ S² ⊇ … until stabilization, as sorted
/// element-sets.  Also asserts S^|S| = S·E(S)·S.
std::vector<std::vector<int>> power_ideals(const FiniteSemigroup& s);

std::vector<int> minimal_ideal(const FiniteSemigroup& s);
bool is_simple(const FiniteSemigroup& s);
bool is_0_simple(const FiniteSemigroup& s);

/// Outcome of the local-group test.  On failure exactly one witness kind is
/// set: a two-element-semilattice pair e < f, or an idempotent whose maximal
/// subgroup fails the group predicate.
struct LocalGroupReport {
  bool ok = false;
  std::optional<std::pair<int, int>> semilattice_pair;
  std::optional<int> failing_idempotent;
};

/// True iff S has no pair of distinct comparable idempotents and every
/// maximal subgroup satisfies group_predicate.  On success the other three
/// conditions of the local-group equivalence are asserted as cross-checks.
template <typename GroupPred>
LocalGroupReport is_local_group(const FiniteSemigroup& s, GroupPred&& group_predicate);

namespace detail {
LocalGroupReport local_group_structure(const FiniteSemigroup& s);
void local_group_cross_checks(const FiniteSemigroup& s);
}  // namespace detail

template <typename GroupPred>
LocalGroupReport is_local_group(const FiniteSemigroup& s, GroupPred&& group_predicate) {
  LocalGroupReport rep = detail::local_group_structure(s);
  if (!rep.ok) return rep;
  detail::local_group_cross_checks(s);
  for (int e : s.idempotents()) {
    if (!group_predicate(maximal_subgroup(s, e))) {
      rep.ok = false;
      rep.failing_idempotent = e;
      return rep;
    }
  }
  return rep;
}

}  // namespace fsemi
