#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "fsemi/semigroup.hpp"

namespace fsemi {

/// A congruence is a partition compatible with multiplication on both sides.
struct Congruence {
  Partition partition;

  int class_count() const { return partition.count; }
  int class_of(int s) const { return partition.class_of[s]; }
  bool same(int s, int t) const { return partition.same(s, t); }
  bool operator==(const Congruence& o) const { return partition == o.partition; }

  static Congruence equality(int n);
  static Congruence universal(int n);
};

/// True iff the partition is stable under left and right translation.
bool is_congruence(const FiniteSemigroup& s, const Partition& p);

/// Smallest congruence containing the given pairs.
Congruence congruence_closure(const FiniteSemigroup& s,
                              const std::vector<std::pair<int, int>>& pairs);

/// Meet in the congruence lattice (partition intersection).
Congruence meet(const Congruence& a, const Congruence& b);

/// All congruences of S via principal congruences closed under join,
/// canonically sorted by class count then by partition labels.
std::vector<Congruence> enumerate_congruences(const FiniteSemigroup& s,
                                              std::size_t cap = 8);

/// True iff every congruence class that is a subsemigroup satisfies
/// v_predicate as a semigroup of its own.
bool is_v_congruence(const FiniteSemigroup& s, const Congruence& cong,
                     const std::function<bool(const FiniteSemigroup&)>& v_predicate);

/// Quotient semigroup together with the quotient morphism (element -> class).
struct Quotient {
  FiniteSemigroup sg;
  std::vector<int> morphism;
};
Quotient quotient(const FiniteSemigroup& s, const Congruence& cong);

/// Coordinates for a generalized group mapping congruence over one regular
/// J-class: the base group G_J = R1 ∩ L1, Green's-Lemma translators r_a
/// (one per R-class of J) and l_b (one per L-class), and a normal subgroup.
struct GgmData {
  int j_class = -1;
  SubgroupTable base_group;
  std::vector<std::pair<int, int>> r_coords;  // R-class id of J -> r_a
  std::vector<std::pair<int, int>> l_coords;  // L-class id of J -> l_b
  std::vector<int> normal_subgroup;           // subset of base_group.carrier
};

/// Canonical-choice GGM congruence for a regular J-class and a normal
/// subgroup N of the canonical base group.  Two elements are identified iff
/// they hit J the same way and agree modulo N in the base-group coordinates.
Congruence ggm_congruence(const FiniteSemigroup& s, int j_class,
                          const std::vector<int>& normal_subgroup);
Congruence ggm_congruence(const FiniteSemigroup& s, const GreensStructure& g,
                          int j_class, const std::vector<int>& normal_subgroup);

/// The canonical GgmData for a regular J-class: base group at the least
/// idempotent of the least R-class, translators chosen by least-index scan.
GgmData ggm_data(const FiniteSemigroup& s, const GreensStructure& g, int j_class,
                 std::vector<int> normal_subgroup);

/// GGM congruence for explicitly supplied coordinates (used to test that the
/// result does not depend on the choices).
Congruence ggm_congruence_with_choices(const FiniteSemigroup& s, const GreensStructure& g,
                                       const GgmData& data);

/// All valid choices of base-group idempotent / r_a / l_b for a J-class.
std::vector<int> ggm_base_candidates(const FiniteSemigroup& s, const GreensStructure& g,
                                     int j_class);
std::vector<int> ggm_r_candidates(const FiniteSemigroup& s, const GreensStructure& g,
                                  int j_class, int r_class, int base_idempotent);
std::vector<int> ggm_l_candidates(const FiniteSemigroup& s, const GreensStructure& g,
                                  int j_class, int l_class, int base_idempotent);

/// True iff S acts faithfully on both sides of a (0-)minimal ideal.
bool is_ggm(const FiniteSemigroup& s);

/// The local monoid of the kernel category of a surjective morphism phi at
/// the object (n_left, n_right): classes of {m : n_left·mφ = n_left and
/// mφ·n_right = n_right} under m ~ m' iff m_L m m_R = m_L m' m_R for all
/// m_L ∈ φ⁻¹(n_left), m_R ∈ φ⁻¹(n_right).
FiniteSemigroup kernel_category_local_monoid(const FiniteSemigroup& s,
                                             const FiniteSemigroup& t,
                                             const std::vector<int>& phi,
                                             int n_left, int n_right);

/// Validates that phi is a surjective morphism S -> T.
void check_surjective_morphism(const FiniteSemigroup& s, const FiniteSemigroup& t,
                               const std::vector<int>& phi);

}  // namespace fsemi
