#pragma once

#include <string>
#include <vector>

#include "fsemi/field.hpp"
#include "fsemi/linalg.hpp"
#include "fsemi/semigroup.hpp"

namespace fsemi {

/// Exact matrix image of a semigroup: one matrix per element, multiplicative.
struct MatrixRep {
  const Field* field = nullptr;
  int dim = 0;
  std::vector<Mat> images;             // indexed by semigroup element
  std::vector<std::string> basis_labels;

  void check_multiplicative(const FiniteSemigroup& s) const;
};

/// Right regular representation on the basis S^1 (identity adjoined when S
/// is not a monoid): image(s) maps basis vector b to basis vector b*s.
MatrixRep regular_representation(const FiniteSemigroup& s, const Field* field);

/// A chain of invariant subspaces 0 < V_1 < ... < V_k = V.  The zero space
/// is implicit; chain.back() is the full space.
struct Flag {
  const Field* field = nullptr;
  int dim = 0;
  std::vector<Subspace> chain;

  std::vector<int> block_sizes() const;
  void check_invariant(const MatrixRep& rep) const;
};

/// Invariant-subspace chain with simple (finite fields) or isotypic
/// (rationals) quotients.  Deterministic.
Flag composition_flag(const FiniteSemigroup& s, const MatrixRep& rep);

struct DiagonalBlock {
  int offset = 0;
  int size = 0;
  std::vector<Mat> images;    // per semigroup element
  FiniteSemigroup monoid;     // the distinct block images as a semigroup
  std::vector<int> morphism;  // element -> block monoid element
};

struct BlockForm {
  Mat basis_change;      // conjugated image = P * image * P^-1
  Mat basis_change_inv;
  std::vector<Mat> conjugated;  // per element, verified block upper triangular
  std::vector<DiagonalBlock> blocks;  // in diagonal order, top-left first
};

BlockForm block_form(const FiniteSemigroup& s, const MatrixRep& rep, const Flag& flag);

enum class TriangularMode { Triangular, Unitriangular };

struct Triangularization {
  Mat basis_change;
  Mat basis_change_inv;
  std::vector<Mat> images;  // conjugated regular representation, upper triangular
};

/// Constructs an exact basis in which the regular representation is upper
/// triangular (diagonal entries in {0,1} in unitriangular mode).  Throws
/// Refusal with the classification witness when the structure theory denies
/// the flag, and MissingParameter for fields without an exact tower here.
Triangularization triangularize(const FiniteSemigroup& s, const FieldSpec& spec,
                                TriangularMode mode);

/// Nilpotency of the two-sided ideal spanned by the given matrices inside
/// the enveloping algebra of the representation.  Returns (nilpotent, index)
/// with index the least k such that the k-th power vanishes.
std::pair<bool, int> span_ideal_nilpotent(const MatrixRep& rep,
                                          const std::vector<Mat>& spanning);

}  // namespace fsemi
