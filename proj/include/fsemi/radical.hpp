#pragma once

#include <functional>
#include <vector>

#include "fsemi/congruence.hpp"
#include "fsemi/field.hpp"
#include "fsemi/semigroup.hpp"

namespace fsemi {

/// The Rhodes radical congruence and its per-J-class constituents.
struct RadicalResult {
  Congruence congruence;  // meet of all per-J-class congruences
  struct PerJClass {
    int j_class;
    GgmData data;          // with N = the unipotent radical of the base group
    Congruence congruence;
  };
  std::vector<PerJClass> per_j_class;
};

/// Largest normal subgroup of G in G_K: trivial in characteristic 0, the
/// largest normal p-subgroup O_p(G) in characteristic p.
SubgroupTable unipotent_radical(const FiniteSemigroup& s, const SubgroupTable& g,
                                const FieldSpec& field);

/// The Rhodes radical as the meet of GGM congruences over all regular
/// J-classes with N the unipotent radical of the base group.
RadicalResult rhodes_radical(const FiniteSemigroup& s, const FieldSpec& field);

/// Brute-force oracle: the unique maximal LG_K-congruence among all
/// congruences of S.
Congruence rhodes_radical_oracle(const FiniteSemigroup& s, const FieldSpec& field,
                                 std::size_t cap = 8);

/// Group predicate for G_K: trivial (char 0) or p-group (char p).
bool in_g_k(const SubgroupTable& g, const FieldSpec& field);

bool is_lg_k(const FiniteSemigroup& s, const FieldSpec& field);
LocalGroupReport is_lg_k_report(const FiniteSemigroup& s, const FieldSpec& field);

/// Is phi: S ->> T an LG_K-morphism (all idempotent preimages in LG_K)?
bool is_lg_k_morphism(const FiniteSemigroup& s, const FiniteSemigroup& t,
                      const std::vector<int>& phi, const FieldSpec& field);

/// Membership in the Mal'cev product LG_K (m) V: the radical quotient lies
/// in V.
bool malcev_member(const FiniteSemigroup& s,
                   const std::function<bool(const FiniteSemigroup&)>& v_predicate,
                   const FieldSpec& field);

/// Realizes the augmentation ideal inside the regular representation and
/// powers it: (nilpotent, index).
std::pair<bool, int> augmentation_ideal_nilpotent(const FiniteSemigroup& s,
                                                  const FieldSpec& field);

/// Nilpotency of the span of {rho(a) - rho(b) : a phi = b phi} inside the
/// regular representation; equals LG_K-morphism-ness of phi.
std::pair<bool, int> morphism_kernel_nilpotent(const FiniteSemigroup& s,
                                               const std::vector<int>& phi,
                                               const FieldSpec& field);

/// Quotient of a subgroup by a normal subgroup, as a group table over the
/// cosets (used by variety tests for G/O_p(G)).
FiniteSemigroup group_quotient(const FiniteSemigroup& s, const SubgroupTable& g,
                               const std::vector<int>& normal);

/// Order of a group element; exponent of a group.
int group_element_order(const FiniteSemigroup& s, const SubgroupTable& g, int x);
int group_exponent(const FiniteSemigroup& s, const SubgroupTable& g);

}  // namespace fsemi
