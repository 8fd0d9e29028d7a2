#include "fsemi/linalg.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

namespace fsemi {

namespace {

// Polynomials over F_p as digit vectors, low degree first.
using PolyP = std::vector<unsigned>;

PolyP poly_mod(PolyP a, const PolyP& m, unsigned p) {
  while (a.size() >= m.size()) {
    unsigned lead = a.back();
    if (lead) {
      std::size_t shift = a.size() - m.size();
      // m is monic.
      for (std::size_t i = 0; i < m.size(); ++i) {
        unsigned sub = (lead * m[i]) % p;
        a[shift + i] = (a[shift + i] + p - sub % p) % p;
      }
    }
    a.pop_back();
  }
  return a;
}

PolyP poly_mul_mod(const PolyP& a, const PolyP& b, const PolyP& m, unsigned p) {
  PolyP out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      out[i + j] = (out[i + j] + a[i] * b[j]) % p;
  return poly_mod(std::move(out), m, p);
}

bool poly_is_zero(const PolyP& a) {
  for (unsigned v : a)
    if (v) return false;
  return true;
}

// Plain trial division of f by g over F_p (g monic); true if divisible.
bool poly_divisible(PolyP f, const PolyP& g, unsigned p) {
  return poly_is_zero(poly_mod(std::move(f), g, p));
}

bool poly_irreducible(const PolyP& f, unsigned p) {
  unsigned deg = static_cast<unsigned>(f.size()) - 1;
  if (deg == 1) return true;
  // Enumerate monic divisor candidates of degree 1..deg/2.
  for (unsigned d = 1; 2 * d <= deg; ++d) {
    unsigned count = 1;
    for (unsigned i = 0; i < d; ++i) count *= p;
    for (unsigned code = 0; code < count; ++code) {
      PolyP g(d + 1, 0);
      unsigned c = code;
      for (unsigned i = 0; i < d; ++i) {
        g[i] = c % p;
        c /= p;
      }
      g[d] = 1;
      if (poly_divisible(f, g, p)) return false;
    }
  }
  return true;
}

}  // namespace

Field::Field(unsigned q) {
  q_ = q;
  p_ = prime_power_base(q);
  if (p_ == 0 || q > 512) throw ParseError("GF(" + std::to_string(q) + ") unsupported");
  deg_ = 0;
  for (unsigned m = q; m > 1; m /= p_) ++deg_;

  // First monic irreducible of degree deg_ in lexicographic code order.
  PolyP modulus;
  if (deg_ == 1) {
    modulus = {0, 1};
  } else {
    unsigned count = 1;
    for (unsigned i = 0; i < deg_; ++i) count *= p_;
    for (unsigned code = 0; code < count; ++code) {
      PolyP f(deg_ + 1, 0);
      unsigned c = code;
      for (unsigned i = 0; i < deg_; ++i) {
        f[i] = c % p_;
        c /= p_;
      }
      f[deg_] = 1;
      if (poly_irreducible(f, p_)) {
        modulus = f;
        break;
      }
    }
    assert(!modulus.empty());
  }

  auto decode = [&](unsigned code) {
    PolyP f(deg_, 0);
    for (unsigned i = 0; i < deg_; ++i) {
      f[i] = code % p_;
      code /= p_;
    }
    return f;
  };
  auto encode = [&](PolyP f) {
    f.resize(deg_, 0);
    unsigned code = 0;
    for (unsigned i = deg_; i-- > 0;) code = code * p_ + f[i];
    return code;
  };

  add_.assign(static_cast<std::size_t>(q) * q, 0);
  mul_.assign(static_cast<std::size_t>(q) * q, 0);
  inv_.assign(q, 0);
  for (unsigned a = 0; a < q; ++a) {
    PolyP fa = decode(a);
    for (unsigned b = 0; b < q; ++b) {
      PolyP fb = decode(b);
      PolyP sum(deg_, 0);
      for (unsigned i = 0; i < deg_; ++i) sum[i] = (fa[i] + fb[i]) % p_;
      add_[static_cast<std::size_t>(a) * q + b] = encode(sum);
      if (deg_ == 1) {
        mul_[static_cast<std::size_t>(a) * q + b] = (a * b) % p_;
      } else {
        mul_[static_cast<std::size_t>(a) * q + b] =
            encode(poly_mul_mod(fa, fb, modulus, p_));
      }
    }
  }
  for (unsigned a = 1; a < q; ++a)
    for (unsigned b = 1; b < q; ++b)
      if (ff_mul(a, b) == 1) {
        inv_[a] = b;
        break;
      }
}

unsigned Field::ff_neg(unsigned a) const {
  for (unsigned b = 0; b < q_; ++b)
    if (ff_add(a, b) == 0) return b;
  throw Error("GF(q) table corrupt");
}

unsigned Field::ff_inv(unsigned a) const {
  if (a == 0) throw Error("division by zero in GF(q)");
  return inv_[a];
}

const Field* Field::rationals() {
  static Field f{RationalTag{}};
  return &f;
}

const Field* Field::gf(unsigned q) {
  static std::map<unsigned, std::unique_ptr<Field>> cache;
  static std::mutex mx;
  std::lock_guard<std::mutex> lock(mx);
  auto it = cache.find(q);
  if (it == cache.end()) it = cache.emplace(q, std::unique_ptr<Field>(new Field(q))).first;
  return it->second.get();
}

const Field* Field::for_spec(const FieldSpec& spec) {
  switch (spec.kind()) {
    case FieldSpec::Kind::Q:
    case FieldSpec::Kind::R:
      return rationals();
    case FieldSpec::Kind::Fq:
      return gf(spec.q());
    case FieldSpec::Kind::Custom:
      if (spec.characteristic() == 0) return rationals();
      return gf(spec.characteristic());
    default:
      throw MissingParameter("no exact arithmetic tower for field " + spec.str());
  }
}

namespace ops {

Scalar zero(const Field* f) {
  (void)f;
  return Scalar{};
}

Scalar one(const Field* f) {
  Scalar s;
  if (f->rational()) s.rat = 1;
  else s.ff = 1;
  return s;
}

Scalar from_int(const Field* f, long v) {
  Scalar s;
  if (f->rational()) {
    s.rat = v;
  } else {
    // Prime-subfield elements encode as their residue (a single base-p digit).
    long p = f->characteristic();
    s.ff = static_cast<unsigned>(((v % p) + p) % p);
  }
  return s;
}

bool is_zero(const Field* f, const Scalar& a) {
  return f->rational() ? a.rat == 0 : a.ff == 0;
}

bool eq(const Field* f, const Scalar& a, const Scalar& b) {
  return f->rational() ? a.rat == b.rat : a.ff == b.ff;
}

Scalar add(const Field* f, const Scalar& a, const Scalar& b) {
  Scalar s;
  if (f->rational()) s.rat = a.rat + b.rat;
  else s.ff = f->ff_add(a.ff, b.ff);
  return s;
}

Scalar sub(const Field* f, const Scalar& a, const Scalar& b) {
  return add(f, a, neg(f, b));
}

Scalar mul(const Field* f, const Scalar& a, const Scalar& b) {
  Scalar s;
  if (f->rational()) s.rat = a.rat * b.rat;
  else s.ff = f->ff_mul(a.ff, b.ff);
  return s;
}

Scalar div(const Field* f, const Scalar& a, const Scalar& b) {
  Scalar s;
  if (f->rational()) {
    if (b.rat == 0) throw Error("division by zero");
    s.rat = a.rat / b.rat;
  } else {
    s.ff = f->ff_mul(a.ff, f->ff_inv(b.ff));
  }
  return s;
}

Scalar neg(const Field* f, const Scalar& a) {
  Scalar s;
  if (f->rational()) s.rat = -a.rat;
  else s.ff = f->ff_neg(a.ff);
  return s;
}

std::string str(const Field* f, const Scalar& a) {
  if (f->rational()) {
    std::ostringstream os;
    os << a.rat;
    return os.str();
  }
  return std::to_string(a.ff);
}

}  // namespace ops

Mat::Mat(const Field* f, int rows, int cols)
    : f_(f), rows_(rows), cols_(cols),
      data_(static_cast<std::size_t>(rows) * cols) {}

Mat Mat::identity(const Field* f, int n) {
  Mat m(f, n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = ops::one(f);
  return m;
}

Mat Mat::operator*(const Mat& o) const {
  assert(cols_ == o.rows_ && f_ == o.f_);
  Mat out(f_, rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const Scalar& a = at(i, k);
      if (ops::is_zero(f_, a)) continue;
      for (int j = 0; j < o.cols_; ++j)
        out.at(i, j) = ops::add(f_, out.at(i, j), ops::mul(f_, a, o.at(k, j)));
    }
  return out;
}

Mat Mat::operator+(const Mat& o) const {
  assert(rows_ == o.rows_ && cols_ == o.cols_);
  Mat out(f_, rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i)
    out.data_[i] = ops::add(f_, data_[i], o.data_[i]);
  return out;
}

Mat Mat::operator-(const Mat& o) const {
  assert(rows_ == o.rows_ && cols_ == o.cols_);
  Mat out(f_, rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i)
    out.data_[i] = ops::sub(f_, data_[i], o.data_[i]);
  return out;
}

Mat Mat::scaled(const Scalar& c) const {
  Mat out(f_, rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = ops::mul(f_, data_[i], c);
  return out;
}

bool Mat::operator==(const Mat& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) return false;
  for (std::size_t i = 0; i < data_.size(); ++i)
    if (!ops::eq(f_, data_[i], o.data_[i])) return false;
  return true;
}

bool Mat::is_zero() const {
  for (const auto& s : data_)
    if (!ops::is_zero(f_, s)) return false;
  return true;
}

bool Mat::is_identity() const {
  if (rows_ != cols_) return false;
  return *this == identity(f_, rows_);
}

bool Mat::is_scalar() const {
  if (rows_ != cols_) return false;
  const Scalar& c = at(0, 0);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) {
      if (i == j ? !ops::eq(f_, at(i, j), c) : !ops::is_zero(f_, at(i, j))) return false;
    }
  return true;
}

Vec Mat::row(int i) const {
  Vec v(cols_);
  for (int j = 0; j < cols_; ++j) v[j] = at(i, j);
  return v;
}

void Mat::set_row(int i, const Vec& v) {
  assert(static_cast<int>(v.size()) == cols_);
  for (int j = 0; j < cols_; ++j) at(i, j) = v[j];
}

Vec Mat::flatten() const { return data_; }

Mat Mat::unflatten(const Field* f, int rows, int cols, const Vec& v) {
  Mat m(f, rows, cols);
  assert(static_cast<std::size_t>(rows) * cols == v.size());
  m.data_ = v;
  return m;
}

Scalar Mat::trace() const {
  Scalar t = ops::zero(f_);
  for (int i = 0; i < std::min(rows_, cols_); ++i) t = ops::add(f_, t, at(i, i));
  return t;
}

std::string Mat::str() const {
  std::string out;
  for (int i = 0; i < rows_; ++i) {
    out += i ? "; " : "[";
    for (int j = 0; j < cols_; ++j) {
      if (j) out += ",";
      out += ops::str(f_, at(i, j));
    }
  }
  return out + "]";
}

Vec vec_mat(const Field* f, const Vec& v, const Mat& m) {
  assert(static_cast<int>(v.size()) == m.rows());
  Vec out(m.cols(), ops::zero(f));
  for (int i = 0; i < m.rows(); ++i) {
    if (ops::is_zero(f, v[i])) continue;
    for (int j = 0; j < m.cols(); ++j)
      out[j] = ops::add(f, out[j], ops::mul(f, v[i], m.at(i, j)));
  }
  return out;
}

Vec vec_add(const Field* f, const Vec& a, const Vec& b) {
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = ops::add(f, a[i], b[i]);
  return out;
}

Vec vec_sub(const Field* f, const Vec& a, const Vec& b) {
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = ops::sub(f, a[i], b[i]);
  return out;
}

Vec vec_scaled(const Field* f, const Vec& a, const Scalar& c) {
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = ops::mul(f, a[i], c);
  return out;
}

bool vec_is_zero(const Field* f, const Vec& v) {
  for (const auto& s : v)
    if (!ops::is_zero(f, s)) return false;
  return true;
}

Subspace::Subspace(const Field* f, int ambient) : f_(f), ambient_(ambient) {}

Vec Subspace::reduce(Vec v) const {
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const Scalar& c = v[pivots_[r]];
    if (ops::is_zero(f_, c)) continue;
    v = vec_sub(f_, v, vec_scaled(f_, rows_[r], c));
  }
  return v;
}

bool Subspace::contains(const Vec& v) const { return vec_is_zero(f_, reduce(v)); }

bool Subspace::contains(const Subspace& other) const {
  for (const auto& r : other.rows_)
    if (!contains(r)) return false;
  return true;
}

bool Subspace::insert(Vec v) {
  v = reduce(std::move(v));
  int pivot = -1;
  for (int j = 0; j < ambient_; ++j)
    if (!ops::is_zero(f_, v[j])) {
      pivot = j;
      break;
    }
  if (pivot == -1) return false;
  v = vec_scaled(f_, v, ops::div(f_, ops::one(f_), v[pivot]));
  // Back-substitute into existing rows.
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const Scalar& c = rows_[r][pivot];
    if (!ops::is_zero(f_, c)) rows_[r] = vec_sub(f_, rows_[r], vec_scaled(f_, v, c));
  }
  auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), pivot);
  std::size_t idx = static_cast<std::size_t>(pos - pivots_.begin());
  pivots_.insert(pos, pivot);
  rows_.insert(rows_.begin() + idx, std::move(v));
  return true;
}

void Subspace::insert_rows(const std::vector<Vec>& vs) {
  for (const auto& v : vs) insert(v);
}

Subspace Subspace::span(const Field* f, int ambient, const std::vector<Vec>& vs) {
  Subspace s(f, ambient);
  s.insert_rows(vs);
  return s;
}

Subspace Subspace::intersect(const Subspace& a, const Subspace& b) {
  assert(a.ambient_ == b.ambient_ && a.f_ == b.f_);
  const Field* f = a.f_;
  // v = x * Ba must reduce to zero against b: kernel of Ba * residue-map(b).
  // residue coordinates of b: entries at non-pivot columns after reduction.
  std::vector<int> nonpivot;
  for (int j = 0; j < b.ambient_; ++j)
    if (!std::binary_search(b.pivots_.begin(), b.pivots_.end(), j)) nonpivot.push_back(j);
  Mat m(f, a.dim(), static_cast<int>(nonpivot.size()));
  for (int i = 0; i < a.dim(); ++i) {
    Vec res = b.reduce(a.rows_[i]);
    for (std::size_t j = 0; j < nonpivot.size(); ++j) m.at(i, static_cast<int>(j)) = res[nonpivot[j]];
  }
  Subspace out(f, a.ambient_);
  for (const Vec& x : left_kernel(m)) {
    Vec v(a.ambient_, ops::zero(f));
    for (int i = 0; i < a.dim(); ++i)
      v = vec_add(f, v, vec_scaled(f, a.rows_[i], x[i]));
    out.insert(std::move(v));
  }
  return out;
}

std::vector<Vec> left_kernel(const Mat& m) {
  const Field* f = m.field();
  int r = m.rows(), c = m.cols();
  // Row-reduce [m | I] by the first c columns; kernel rows are those whose
  // m-part reduces to zero.
  std::vector<Vec> rows(r);
  std::vector<Vec> tail(r);
  for (int i = 0; i < r; ++i) {
    rows[i] = m.row(i);
    tail[i].assign(r, ops::zero(f));
    tail[i][i] = ops::one(f);
  }
  std::vector<int> pivot_col;
  std::vector<int> pivot_row;
  int rank = 0;
  for (int col = 0; col < c && rank < r; ++col) {
    int sel = -1;
    for (int i = rank; i < r; ++i)
      if (!ops::is_zero(f, rows[i][col])) {
        sel = i;
        break;
      }
    if (sel == -1) continue;
    std::swap(rows[rank], rows[sel]);
    std::swap(tail[rank], tail[sel]);
    Scalar inv = ops::div(f, ops::one(f), rows[rank][col]);
    rows[rank] = vec_scaled(f, rows[rank], inv);
    tail[rank] = vec_scaled(f, tail[rank], inv);
    for (int i = 0; i < r; ++i) {
      if (i == rank) continue;
      const Scalar cc = rows[i][col];
      if (ops::is_zero(f, cc)) continue;
      rows[i] = vec_sub(f, rows[i], vec_scaled(f, rows[rank], cc));
      tail[i] = vec_sub(f, tail[i], vec_scaled(f, tail[rank], cc));
    }
    pivot_col.push_back(col);
    pivot_row.push_back(rank);
    ++rank;
  }
  std::vector<Vec> kernel;
  for (int i = rank; i < r; ++i) kernel.push_back(tail[i]);
  return kernel;
}

Mat inverse(const Mat& m) {
  const Field* f = m.field();
  assert(m.rows() == m.cols());
  int n = m.rows();
  std::vector<Vec> rows(n), tail(n);
  for (int i = 0; i < n; ++i) {
    rows[i] = m.row(i);
    tail[i].assign(n, ops::zero(f));
    tail[i][i] = ops::one(f);
  }
  for (int col = 0; col < n; ++col) {
    int sel = -1;
    for (int i = col; i < n; ++i)
      if (!ops::is_zero(f, rows[i][col])) {
        sel = i;
        break;
      }
    if (sel == -1) throw Error("matrix is singular");
    std::swap(rows[col], rows[sel]);
    std::swap(tail[col], tail[sel]);
    Scalar inv = ops::div(f, ops::one(f), rows[col][col]);
    rows[col] = vec_scaled(f, rows[col], inv);
    tail[col] = vec_scaled(f, tail[col], inv);
    for (int i = 0; i < n; ++i) {
      if (i == col) continue;
      const Scalar c = rows[i][col];
      if (ops::is_zero(f, c)) continue;
      rows[i] = vec_sub(f, rows[i], vec_scaled(f, rows[col], c));
      tail[i] = vec_sub(f, tail[i], vec_scaled(f, tail[col], c));
    }
  }
  Mat out(f, n, n);
  for (int i = 0; i < n; ++i) out.set_row(i, tail[i]);
  return out;
}

CoordSolver::CoordSolver(const Field* f, const std::vector<Vec>& independent_rows)
    : f_(f), k_(static_cast<int>(independent_rows.size())),
      n_(independent_rows.empty() ? 0 : static_cast<int>(independent_rows[0].size())) {
  // Reduce rows to echelon form, tracking the transform.
  for (int i = 0; i < k_; ++i) {
    Vec v = independent_rows[i];
    Vec t(k_, ops::zero(f));
    t[i] = ops::one(f);
    for (std::size_t r = 0; r < reduced_.size(); ++r) {
      const Scalar c = v[pivots_[r]];
      if (ops::is_zero(f, c)) continue;
      v = vec_sub(f, v, vec_scaled(f, reduced_[r], c));
      t = vec_sub(f, t, vec_scaled(f, transform_[r], c));
    }
    int pivot = -1;
    for (int j = 0; j < n_; ++j)
      if (!ops::is_zero(f, v[j])) {
        pivot = j;
        break;
      }
    assert(pivot != -1 && "CoordSolver rows must be independent");
    Scalar inv = ops::div(f, ops::one(f), v[pivot]);
    v = vec_scaled(f, v, inv);
    t = vec_scaled(f, t, inv);
    for (std::size_t r = 0; r < reduced_.size(); ++r) {
      const Scalar c = reduced_[r][pivot];
      if (ops::is_zero(f, c)) continue;
      reduced_[r] = vec_sub(f, reduced_[r], vec_scaled(f, v, c));
      transform_[r] = vec_sub(f, transform_[r], vec_scaled(f, t, c));
    }
    auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), pivot);
    std::size_t idx = static_cast<std::size_t>(pos - pivots_.begin());
    pivots_.insert(pos, pivot);
    reduced_.insert(reduced_.begin() + idx, std::move(v));
    transform_.insert(transform_.begin() + idx, std::move(t));
  }
}

Vec CoordSolver::express(const Vec& v) const {
  Vec rem = v;
  Vec coords(k_, ops::zero(f_));
  for (std::size_t r = 0; r < reduced_.size(); ++r) {
    const Scalar c = rem[pivots_[r]];
    if (ops::is_zero(f_, c)) continue;
    rem = vec_sub(f_, rem, vec_scaled(f_, reduced_[r], c));
    coords = vec_add(f_, coords, vec_scaled(f_, transform_[r], c));
  }
  if (!vec_is_zero(f_, rem)) throw Error("vector outside the span");
  return coords;
}

Subspace spin(const Subspace& seed, const std::vector<Mat>& actions) {
  Subspace out = seed;
  std::vector<Vec> queue = out.basis();
  while (!queue.empty()) {
    Vec v = std::move(queue.back());
    queue.pop_back();
    for (const Mat& m : actions) {
      Vec w = vec_mat(out.field(), v, m);
      Vec res = out.reduce(w);
      if (!vec_is_zero(out.field(), res)) {
        out.insert(res);
        queue.push_back(std::move(w));
      }
    }
  }
  return out;
}

std::vector<Scalar> minimal_polynomial(const Mat& m) {
  const Field* f = m.field();
  assert(m.rows() == m.cols());
  int n = m.rows();
  // Insert powers I, m, m^2, ... into a subspace of K^{n*n} until dependence.
  Subspace span(f, n * n);
  std::vector<Vec> powers;
  Mat acc = Mat::identity(f, n);
  while (true) {
    Vec flat = acc.flatten();
    powers.push_back(flat);
    if (!span.insert(flat)) {
      // Dependent: express last power in terms of the previous ones.
      powers.pop_back();
      CoordSolver solver(f, powers);
      Vec coords = solver.express(flat);
      std::vector<Scalar> poly(powers.size() + 1);
      for (std::size_t i = 0; i < powers.size(); ++i) poly[i] = ops::neg(f, coords[i]);
      poly[powers.size()] = ops::one(f);
      return poly;
    }
    acc = acc * m;
  }
}

Mat poly_eval(const std::vector<Scalar>& poly, const Mat& m) {
  const Field* f = m.field();
  int n = m.rows();
  Mat out(f, n, n);
  Mat power = Mat::identity(f, n);
  for (std::size_t i = 0; i < poly.size(); ++i) {
    if (!ops::is_zero(f, poly[i])) out = out + power.scaled(poly[i]);
    if (i + 1 < poly.size()) power = power * m;
  }
  return out;
}

namespace {

std::vector<mpz_class> small_divisors(const mpz_class& n_in, std::size_t cap = 2000000) {
  mpz_class n = abs(n_in);
  std::vector<mpz_class> out;
  if (n == 0) return out;
  std::size_t iters = 0;
  for (mpz_class d = 1; d * d <= n; ++d) {
    if (++iters > cap) break;  // give up on huge inputs; callers tolerate misses
    if (n % d == 0) {
      out.push_back(d);
      out.push_back(n / d);
    }
  }
  return out;
}

}  // namespace

std::vector<mpq_class> rational_roots(const Field* f, const std::vector<Scalar>& poly) {
  assert(f->rational());
  // Strip trailing zero coefficients (roots at 0 handled explicitly).
  std::vector<mpq_class> coeffs;
  for (const auto& s : poly) coeffs.push_back(s.rat);
  while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
  std::vector<mpq_class> roots;
  if (coeffs.empty()) return roots;

  std::size_t low = 0;
  while (low < coeffs.size() && coeffs[low] == 0) ++low;
  if (low > 0) roots.push_back(0);
  if (low >= coeffs.size() - 1) return roots;

  // Clear denominators.
  mpz_class lcm_den = 1;
  for (std::size_t i = low; i < coeffs.size(); ++i)
    lcm_den = lcm(lcm_den, coeffs[i].get_den());
  std::vector<mpz_class> ic;
  for (std::size_t i = low; i < coeffs.size(); ++i)
    ic.push_back(mpz_class(coeffs[i] * lcm_den));

  auto eval = [&](const mpq_class& x) {
    mpq_class acc = 0;
    for (std::size_t i = ic.size(); i-- > 0;) acc = acc * x + ic[i];
    return acc;
  };

  for (const mpz_class& p : small_divisors(ic.front()))
    for (const mpz_class& q : small_divisors(ic.back()))
      for (int sign : {1, -1}) {
        mpq_class cand(p * sign, q);
        cand.canonicalize();
        if (eval(cand) == 0 &&
            std::find(roots.begin(), roots.end(), cand) == roots.end())
          roots.push_back(cand);
      }
  std::sort(roots.begin(), roots.end());
  return roots;
}

}  // namespace fsemi
