#pragma once

#include <gmpxx.h>

#include <memory>
#include <string>
#include <vector>

#include "fsemi/errors.hpp"
#include "fsemi/field.hpp"

namespace fsemi {

/// Arithmetic context for exact scalars: the rationals or a small GF(q)
/// with table-based arithmetic.  Instances are interned; compare by pointer.
class Field {
 public:
  static const Field* rationals();
  static const Field* gf(unsigned q);  // q = p^m, q <= 512
  /// The computation field for a FieldSpec: Q and R compute over the
  /// rationals, Fq over GF(q).  C and FbarP have no exact tower here.
  static const Field* for_spec(const FieldSpec& spec);

  bool rational() const { return q_ == 0; }
  unsigned characteristic() const { return p_; }
  unsigned size() const { return q_; }  // 0 for Q

  std::string str() const { return rational() ? "Q" : "F" + std::to_string(q_); }

 private:
  struct RationalTag {};
  Field(RationalTag) {}
  explicit Field(unsigned q);

  unsigned q_ = 0, p_ = 0, deg_ = 1;
  std::vector<unsigned> mul_, inv_, add_;  // q*q tables for GF(q)

 public:
  // GF(q) element helpers (element codes are base-p digit encodings).
  unsigned ff_add(unsigned a, unsigned b) const { return add_[a * q_ + b]; }
  unsigned ff_mul(unsigned a, unsigned b) const { return mul_[a * q_ + b]; }
  unsigned ff_neg(unsigned a) const;
  unsigned ff_inv(unsigned a) const;
};

/// An exact scalar living in a Field.  The field is carried by the
/// containing matrix/vector, not by the scalar.  Only the member matching
/// the field is ever set; the other stays zero, so memberwise equality is
/// exact equality.
struct Scalar {
  mpq_class rat;
  unsigned ff = 0;

  Scalar() = default;
  bool operator==(const Scalar& o) const { return rat == o.rat && ff == o.ff; }
};

class Mat;
using Vec = std::vector<Scalar>;

/// Scalar operations, dispatched on the field.
namespace ops {
Scalar zero(const Field* f);
Scalar one(const Field* f);
Scalar from_int(const Field* f, long v);
bool is_zero(const Field* f, const Scalar& a);
bool eq(const Field* f, const Scalar& a, const Scalar& b);
Scalar add(const Field* f, const Scalar& a, const Scalar& b);
Scalar sub(const Field* f, const Scalar& a, const Scalar& b);
Scalar mul(const Field* f, const Scalar& a, const Scalar& b);
Scalar div(const Field* f, const Scalar& a, const Scalar& b);
Scalar neg(const Field* f, const Scalar& a);
std::string str(const Field* f, const Scalar& a);
}  // namespace ops

/// Dense matrix over an exact field.
class Mat {
 public:
  Mat() = default;
  Mat(const Field* f, int rows, int cols);
  static Mat identity(const Field* f, int n);

  const Field* field() const { return f_; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Scalar& at(int i, int j) { return data_[static_cast<std::size_t>(i) * cols_ + j]; }
  const Scalar& at(int i, int j) const {
    return data_[static_cast<std::size_t>(i) * cols_ + j];
  }
  void set_int(int i, int j, long v) { at(i, j) = ops::from_int(f_, v); }

  Mat operator*(const Mat& o) const;
  Mat operator+(const Mat& o) const;
  Mat operator-(const Mat& o) const;
  Mat scaled(const Scalar& c) const;
  bool operator==(const Mat& o) const;
  bool is_zero() const;
  bool is_identity() const;
  /// c*I for some scalar c?
  bool is_scalar() const;

  Vec row(int i) const;
  void set_row(int i, const Vec& v);
  /// The matrix flattened row-major into a vector of length rows*cols.
  Vec flatten() const;
  static Mat unflatten(const Field* f, int rows, int cols, const Vec& v);

  Scalar trace() const;
  std::string str() const;

 private:
  const Field* f_ = nullptr;
  int rows_ = 0, cols_ = 0;
  std::vector<Scalar> data_;
};

Vec vec_mat(const Field* f, const Vec& v, const Mat& m);
Vec vec_add(const Field* f, const Vec& a, const Vec& b);
Vec vec_sub(const Field* f, const Vec& a, const Vec& b);
Vec vec_scaled(const Field* f, const Vec& a, const Scalar& c);
bool vec_is_zero(const Field* f, const Vec& v);

/// A subspace of K^n kept as a reduced-row-echelon basis, so representation
/// is canonical and equality is basis equality.
class Subspace {
 public:
  Subspace(const Field* f, int ambient);

  int ambient() const { return ambient_; }
  int dim() const { return static_cast<int>(rows_.size()); }
  const Field* field() const { return f_; }
  const std::vector<Vec>& basis() const { return rows_; }
  const std::vector<int>& pivots() const { return pivots_; }

  /// Residue of v after reduction by the basis.
  Vec reduce(Vec v) const;
  bool contains(const Vec& v) const;
  bool contains(const Subspace& other) const;
  /// Insert a vector, keeping RREF.  Returns true if the dimension grew.
  bool insert(Vec v);
  void insert_rows(const std::vector<Vec>& vs);

  bool operator==(const Subspace& o) const {
    return ambient_ == o.ambient_ && rows_ == o.rows_;
  }

  static Subspace span(const Field* f, int ambient, const std::vector<Vec>& vs);
  static Subspace intersect(const Subspace& a, const Subspace& b);

 private:
  const Field* f_;
  int ambient_;
  std::vector<Vec> rows_;   // RREF, sorted by pivot
  std::vector<int> pivots_;
};

/// Basis of {v : v * m = 0} (the left kernel).
std::vector<Vec> left_kernel(const Mat& m);

/// Exact inverse; throws if singular.
Mat inverse(const Mat& m);

/// Expresses vectors in the coordinates of a fixed independent row list.
class CoordSolver {
 public:
  CoordSolver(const Field* f, const std::vector<Vec>& independent_rows);
  /// Coordinates x with x * rows = v; throws if v is outside the span.
  Vec express(const Vec& v) const;

 private:
  const Field* f_;
  int k_, n_;
  std::vector<Vec> reduced_;   // RREF\'d rows
  std::vector<int> pivots_;
  std::vector<Vec> transform_; // transform_[i] = coords of reduced_[i]
};

/// Smallest invariant subspace containing the seed under right action.
Subspace spin(const Subspace& seed, const std::vector<Mat>& actions);

/// Monic minimal polynomial, low degree first: p[0] + p[1] x + ... + x^deg.
std::vector<Scalar> minimal_polynomial(const Mat& m);

/// Evaluates a polynomial (low degree first) at a matrix.
Mat poly_eval(const std::vector<Scalar>& poly, const Mat& m);

/// All rational roots of a polynomial over Q (exact).  May miss roots whose
/// numerator/denominator exceed the factoring cap; desk-scale inputs do not.
std::vector<mpq_class> rational_roots(const Field* f, const std::vector<Scalar>& poly);

}  // namespace fsemi
