#include "fsemi/rep.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <map>
#include <optional>

#include "fsemi/variety.hpp"

namespace fsemi {

void MatrixRep::check_multiplicative(const FiniteSemigroup& s) const {
  for (int a = 0; a < s.order(); ++a)
    for (int b = 0; b < s.order(); ++b)
      if (!(images[a] * images[b] == images[s.product(a, b)]))
        throw Error("representation is not multiplicative");
}

MatrixRep regular_representation(const FiniteSemigroup& s, const Field* field) {
  int n = s.order();
  bool monoid = s.identity().has_value();
  int dim = monoid ? n : n + 1;
  MatrixRep rep;
  rep.field = field;
  rep.dim = dim;
  rep.basis_labels.reserve(dim);
  for (int b = 0; b < n; ++b) rep.basis_labels.push_back("s" + std::to_string(b));
  if (!monoid) rep.basis_labels.push_back("1");
  rep.images.reserve(n);
  for (int elt = 0; elt < n; ++elt) {
    Mat m(field, dim, dim);
    for (int b = 0; b < n; ++b) m.set_int(b, s.product(b, elt), 1);
    if (!monoid) m.set_int(n, elt, 1);
    rep.images.push_back(std::move(m));
  }
  return rep;
}

std::vector<int> Flag::block_sizes() const {
  std::vector<int> out;
  int prev = 0;
  for (const auto& sub : chain) {
    out.push_back(sub.dim() - prev);
    prev = sub.dim();
  }
  return out;
}

void Flag::check_invariant(const MatrixRep& rep) const {
  for (const auto& sub : chain)
    for (const auto& row : sub.basis())
      for (const auto& img : rep.images)
        if (!sub.contains(vec_mat(field, row, img)))
          throw Error("flag subspace is not invariant");
}

namespace {

// Deduplicated action matrices (always including the identity).
std::vector<Mat> action_set(const MatrixRep& rep) {
  std::vector<Mat> acts{Mat::identity(rep.field, rep.dim)};
  for (const Mat& m : rep.images) {
    bool dup = false;
    for (const Mat& a : acts)
      if (a == m) {
        dup = true;
        break;
      }
    if (!dup) acts.push_back(m);
  }
  return acts;
}

// Coordinates for the quotient upper/lower of two nested invariant
// subspaces.  Layer vectors are expressed over the residues of upper's
// basis modulo lower.
class LayerCoords {
 public:
  LayerCoords(const Field* f, const Subspace& lower, const Subspace& upper)
      : f_(f), lower_(lower) {
    Subspace probe = lower;
    for (const auto& row : upper.basis()) {
      Vec res = lower.reduce(row);
      if (probe.insert(res)) reps_.push_back(std::move(res));
    }
    solver_.emplace(f, reps_);
  }

  int dim() const { return static_cast<int>(reps_.size()); }

  Vec to_coords(const Vec& global) const {
    return solver_->express(lower_.reduce(global));
  }
  Vec to_global(const Vec& coords) const {
    Vec out(lower_.ambient(), ops::zero(f_));
    for (std::size_t j = 0; j < reps_.size(); ++j)
      out = vec_add(f_, out, vec_scaled(f_, reps_[j], coords[j]));
    return out;
  }
  Mat action(const Mat& global_img) const {
    int k = dim();
    Mat out(f_, k, k);
    for (int i = 0; i < k; ++i)
      out.set_row(i, to_coords(vec_mat(f_, reps_[i], global_img)));
    return out;
  }

 private:
  const Field* f_;
  const Subspace& lower_;
  std::vector<Vec> reps_;
  std::optional<CoordSolver> solver_;
};

// ---- rational route: Dickson radical chain + isotypic refinement ----

// Basis matrices of the enveloping algebra (RREF over flattened images).
std::vector<Mat> algebra_basis(const Field* f, int dim, const std::vector<Mat>& gens) {
  Subspace span(f, dim * dim);
  for (const Mat& m : gens) span.insert(m.flatten());
  std::vector<Mat> out;
  for (const auto& row : span.basis()) out.push_back(Mat::unflatten(f, dim, dim, row));
  return out;
}

// Jacobson radical of the enveloping algebra via the trace form (char 0).
std::vector<Mat> dickson_radical(const Field* f, int dim, const std::vector<Mat>& basis) {
  int m = static_cast<int>(basis.size());
  Mat gram(f, m, m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) gram.at(i, j) = (basis[i] * basis[j]).trace();
  std::vector<Mat> rad;
  for (const Vec& x : left_kernel(gram)) {
    Mat r(f, dim, dim);
    for (int i = 0; i < m; ++i)
      if (!ops::is_zero(f, x[i])) r = r + basis[i].scaled(x[i]);
    rad.push_back(std::move(r));
  }
  return rad;
}

// Joint kernel {w in W : w*M = 0 for all M} as a subspace of the layer.
Subspace joint_kernel(const Field* f, const Subspace& w, const std::vector<Mat>& ms) {
  if (ms.empty()) return w;
  int k = w.dim(), amb = w.ambient();
  Mat stacked(f, k, static_cast<int>(ms.size()) * amb);
  for (int i = 0; i < k; ++i) {
    int off = 0;
    for (const Mat& m : ms) {
      Vec img = vec_mat(f, w.basis()[i], m);
      for (int j = 0; j < amb; ++j) stacked.at(i, off + j) = img[j];
      off += amb;
    }
  }
  Subspace out(f, amb);
  for (const Vec& x : left_kernel(stacked)) {
    Vec v(amb, ops::zero(f));
    for (int i = 0; i < k; ++i) v = vec_add(f, v, vec_scaled(f, w.basis()[i], x[i]));
    out.insert(std::move(v));
  }
  return out;
}

Subspace image_span(const Field* f, const Subspace& w, const std::vector<Mat>& ms) {
  Subspace out(f, w.ambient());
  for (const auto& row : w.basis())
    for (const Mat& m : ms) out.insert(vec_mat(f, row, m));
  return out;
}

// Restriction of matrices to an invariant subspace, in its own coordinates.
std::vector<Mat> restrict_to(const Field* f, const Subspace& w, const std::vector<Mat>& ms) {
  CoordSolver solver(f, w.basis());
  std::vector<Mat> out;
  int k = w.dim();
  for (const Mat& m : ms) {
    Mat r(f, k, k);
    for (int i = 0; i < k; ++i) r.set_row(i, solver.express(vec_mat(f, w.basis()[i], m)));
    out.push_back(std::move(r));
  }
  return out;
}

// Matrices commuting with every given matrix.
std::vector<Mat> commutant(const Field* f, int k, const std::vector<Mat>& ms) {
  if (k == 0) return {};
  // Unknown X (k x k): X*M - M*X = 0 for all M.
  int nun = k * k;
  int neq = static_cast<int>(ms.size()) * k * k;
  Mat sys(f, nun, neq);
  int eq = 0;
  for (const Mat& m : ms) {
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) {
        // coefficient of X[a][b] in (XM - MX)[i][j]
        for (int b = 0; b < k; ++b)
          sys.at(i * k + b, eq) = ops::add(f, sys.at(i * k + b, eq), m.at(b, j));
        for (int a = 0; a < k; ++a)
          sys.at(a * k + j, eq) = ops::sub(f, sys.at(a * k + j, eq), m.at(i, a));
        ++eq;
      }
  }
  std::vector<Mat> out;
  for (const Vec& x : left_kernel(sys)) out.push_back(Mat::unflatten(f, k, k, x));
  return out;
}

// Divides out every occurrence of the rational root r from poly (exact).
std::vector<Scalar> deflate(const Field* f, std::vector<Scalar> poly, const mpq_class& root) {
  while (true) {
    // Synthetic division by (x - root).
    std::vector<Scalar> quot(poly.size() - 1);
    Scalar carry = ops::zero(f);
    for (std::size_t i = poly.size(); i-- > 1;) {
      carry = ops::add(f, poly[i], carry);
      quot[i - 1] = carry;
      Scalar tmp;
      tmp.rat = carry.rat * root;
      carry = tmp;
    }
    Scalar rem = ops::add(f, poly[0], carry);
    if (!ops::is_zero(f, rem)) return poly;
    poly = std::move(quot);
    if (poly.size() <= 1) return poly;
    // Check whether root still divides.
    mpq_class val = 0;
    for (std::size_t i = poly.size(); i-- > 0;) val = val * root + poly[i].rat;
    if (val != 0) return poly;
  }
}

// Splits a piece by a central element: eigenspaces at rational eigenvalues
// plus the kernel of the deflated minimal polynomial.
std::vector<Subspace> central_split(const Field* f, const Subspace& piece, const Mat& z) {
  int k = piece.dim();
  auto mp = minimal_polynomial(z);
  if (mp.size() <= 2) return {};  // scalar action, nothing to split
  auto roots = rational_roots(f, mp);
  if (roots.empty()) return {};
  std::vector<Subspace> parts;
  std::vector<Scalar> residual = mp;
  for (const mpq_class& r : roots) {
    Mat shifted = z;
    for (int i = 0; i < k; ++i) {
      Scalar c;
      c.rat = r;
      shifted.at(i, i) = ops::sub(f, shifted.at(i, i), c);
    }
    Subspace part(f, k);
    for (const Vec& v : left_kernel(shifted)) part.insert(v);
    if (part.dim() > 0) parts.push_back(std::move(part));
    residual = deflate(f, residual, r);
  }
  if (residual.size() > 1) {
    Mat g = poly_eval(residual, z);
    Subspace part(f, k);
    for (const Vec& v : left_kernel(g)) part.insert(v);
    if (part.dim() > 0) parts.push_back(std::move(part));
  }
  if (parts.size() < 2) return {};
  int total = 0;
  for (const auto& p : parts) total += p.dim();
  if (total != k) return {};  // generalized eigenspaces overlap; stay coarse
  return parts;
}

// Refines one semisimple layer (given in its own coordinates K^k) into
// invariant pieces: apex kernels per regular J-class, then central
// eigen-splits, then scalar pieces into lines.
std::vector<Subspace> refine_layer(const Field* f, const FiniteSemigroup& s,
                                   const GreensStructure& g,
                                   const std::vector<Mat>& elt_imgs /*per element*/) {
  int k = elt_imgs.empty() ? 0 : elt_imgs[0].rows();
  std::vector<Subspace> pieces;
  {
    Subspace full(f, k);
    for (int i = 0; i < k; ++i) {
      Vec e(k, ops::zero(f));
      e[i] = ops::one(f);
      full.insert(std::move(e));
    }
    pieces.push_back(std::move(full));
  }

  bool changed = true;
  while (changed) {
    changed = false;
    // Apex-kernel splits: the ideal of each regular J-class either kills a
    // constituent or acts invertibly on it.
    for (int jc = 0; jc < g.j.count && !changed; ++jc) {
      if (!g.regular[jc]) continue;
      std::vector<Mat> ideal_imgs;
      for (int elt = 0; elt < s.order(); ++elt)
        if (g.j_below[g.j_of(elt)][jc]) ideal_imgs.push_back(elt_imgs[elt]);
      std::vector<Subspace> next;
      for (const auto& piece : pieces) {
        if (piece.dim() <= 1) {
          next.push_back(piece);
          continue;
        }
        Subspace killed = joint_kernel(f, piece, ideal_imgs);
        if (killed.dim() == 0 || killed.dim() == piece.dim()) {
          next.push_back(piece);
          continue;
        }
        Subspace moved = image_span(f, piece, ideal_imgs);
        assert(killed.dim() + moved.dim() == piece.dim() &&
               "apex kernel and image must be complementary on a semisimple layer");
        next.push_back(std::move(killed));
        next.push_back(std::move(moved));
        changed = true;
      }
      pieces = std::move(next);
    }
    if (changed) continue;

    // Central eigen-splits within each piece.
    for (std::size_t pi = 0; pi < pieces.size() && !changed; ++pi) {
      const Subspace& piece = pieces[pi];
      if (piece.dim() <= 1) continue;
      std::vector<Mat> rs = restrict_to(f, piece, elt_imgs);
      // Deduplicate restricted images for the linear systems.
      std::vector<Mat> rs_dedup{Mat::identity(f, piece.dim())};
      for (const Mat& m : rs) {
        bool dup = false;
        for (const Mat& a : rs_dedup)
          if (a == m) {
            dup = true;
            break;
          }
        if (!dup) rs_dedup.push_back(m);
      }
      std::vector<Mat> comm = commutant(f, piece.dim(), rs_dedup);
      std::vector<Mat> both = rs_dedup;
      both.insert(both.end(), comm.begin(), comm.end());
      std::vector<Mat> center = commutant(f, piece.dim(), both);
      for (const Mat& z : center) {
        if (z.is_scalar()) continue;
        auto parts = central_split(f, piece, z);
        if (parts.empty()) continue;
        std::vector<Subspace> next;
        for (std::size_t pj = 0; pj < pieces.size(); ++pj) {
          if (pj != pi) {
            next.push_back(pieces[pj]);
            continue;
          }
          for (const auto& part : parts) {
            // Lift from piece coordinates back to layer coordinates.
            Subspace lifted(f, piece.ambient());
            for (const auto& x : part.basis()) {
              Vec v(piece.ambient(), ops::zero(f));
              for (int i = 0; i < piece.dim(); ++i)
                v = vec_add(f, v, vec_scaled(f, piece.basis()[i], x[i]));
              lifted.insert(std::move(v));
            }
            next.push_back(std::move(lifted));
          }
        }
        pieces = std::move(next);
        changed = true;
        break;
      }
    }
    if (changed) continue;

    // Pieces with scalar action split into coordinate lines.
    for (std::size_t pi = 0; pi < pieces.size() && !changed; ++pi) {
      const Subspace& piece = pieces[pi];
      if (piece.dim() <= 1) continue;
      std::vector<Mat> rs = restrict_to(f, piece, elt_imgs);
      bool all_scalar = true;
      for (const Mat& m : rs)
        if (!m.is_scalar()) {
          all_scalar = false;
          break;
        }
      if (!all_scalar) continue;
      std::vector<Subspace> next;
      for (std::size_t pj = 0; pj < pieces.size(); ++pj) {
        if (pj != pi) {
          next.push_back(pieces[pj]);
          continue;
        }
        for (const auto& row : piece.basis()) {
          Subspace line(f, piece.ambient());
          line.insert(row);
          next.push_back(std::move(line));
        }
      }
      pieces = std::move(next);
      changed = true;
    }
  }

  std::sort(pieces.begin(), pieces.end(), [](const Subspace& a, const Subspace& b) {
    return a.pivots() < b.pivots();
  });
  return pieces;
}

Flag flag_rational(const FiniteSemigroup& s, const MatrixRep& rep) {
  const Field* f = rep.field;
  int d = rep.dim;
  auto acts = action_set(rep);
  auto basis = algebra_basis(f, d, acts);
  auto rad = dickson_radical(f, d, basis);

  // Descending module radical chain V > V*Rad > ... > 0.
  std::vector<Subspace> desc;
  Subspace full(f, d);
  for (int i = 0; i < d; ++i) {
    Vec e(d, ops::zero(f));
    e[i] = ops::one(f);
    full.insert(std::move(e));
  }
  desc.push_back(full);
  while (!rad.empty()) {
    const Subspace& w = desc.back();
    Subspace next(f, d);
    for (const auto& row : w.basis())
      for (const Mat& r : rad) next.insert(vec_mat(f, row, r));
    if (next.dim() == 0) break;
    assert(next.dim() < w.dim() && "module radical chain must descend");
    desc.push_back(std::move(next));
  }

  GreensStructure g = greens(s);

  Flag flag;
  flag.field = f;
  flag.dim = d;
  Subspace lower(f, d);
  for (std::size_t t = desc.size(); t-- > 0;) {
    const Subspace& upper = desc[t];
    LayerCoords lc(f, lower, upper);
    if (lc.dim() == 0) continue;
    // Per-element layer actions; the adjoined identity (regular rep of a
    // non-monoid) acts as the identity matrix and is covered implicitly.
    std::vector<Mat> elt_imgs;
    elt_imgs.reserve(rep.images.size());
    for (const Mat& img : rep.images) elt_imgs.push_back(lc.action(img));
    auto pieces = refine_layer(f, s, g, elt_imgs);
    for (const auto& piece : pieces) {
      Subspace grown = lower;
      for (const auto& x : piece.basis()) grown.insert(lc.to_global(x));
      lower = std::move(grown);
      flag.chain.push_back(lower);
    }
    assert(lower.dim() == upper.dim() && "layer pieces must fill the layer");
  }
  assert(flag.chain.back().dim() == d);
  return flag;
}

// ---- finite-field route: exhaustive minimal-submodule search ----

Flag flag_finite(const FiniteSemigroup& s, const MatrixRep& rep) {
  (void)s;
  const Field* f = rep.field;
  int d = rep.dim;
  unsigned q = f->size();

  Flag flag;
  flag.field = f;
  flag.dim = d;
  Subspace lower(f, d);
  auto acts = action_set(rep);

  while (lower.dim() < d) {
    // Quotient coordinates over the residues of non-pivot standard vectors.
    std::vector<Vec> reps;
    Subspace probe = lower;
    for (int i = 0; i < d; ++i) {
      Vec e(d, ops::zero(f));
      e[i] = ops::one(f);
      Vec res = lower.reduce(e);
      if (probe.insert(res)) reps.push_back(std::move(res));
    }
    int k = static_cast<int>(reps.size());
    CoordSolver solver(f, reps);
    std::vector<Mat> qacts;
    for (const Mat& a : acts) {
      Mat m(f, k, k);
      for (int i = 0; i < k; ++i)
        m.set_row(i, solver.express(lower.reduce(vec_mat(f, reps[i], a))));
      qacts.push_back(std::move(m));
    }

    double bits = k * std::log2(static_cast<double>(q));
    if (bits > 20.0)
      throw CapExceeded(1u << 20, "finite-field submodule search over dimension " +
                                      std::to_string(k));

    // Scan projective vectors for the smallest cyclic submodule.
    std::optional<Subspace> best;
    std::vector<unsigned> digits(k, 0);
    for (int lead = k - 1; lead >= 0; --lead) {
      // vectors with first nonzero coordinate at position `lead` equal to 1
      long count = 1;
      for (int i = lead + 1; i < k; ++i) count *= q;
      for (long code = 0; code < count; ++code) {
        Vec v(k, ops::zero(f));
        v[lead] = ops::one(f);
        long c = code;
        for (int i = lead + 1; i < k; ++i) {
          Scalar sc;
          sc.ff = static_cast<unsigned>(c % q);
          v[i] = sc;
          c /= q;
        }
        Subspace seed(f, k);
        seed.insert(std::move(v));
        Subspace spun = spin(seed, qacts);
        if (!best || spun.dim() < best->dim()) best = std::move(spun);
        if (best->dim() == 1) break;
      }
      if (best && best->dim() == 1) break;
    }
    assert(best && best->dim() > 0);
    Subspace grown = lower;
    for (const auto& x : best->basis()) {
      Vec v(d, ops::zero(f));
      for (int i = 0; i < k; ++i) v = vec_add(f, v, vec_scaled(f, reps[i], x[i]));
      grown.insert(std::move(v));
    }
    lower = std::move(grown);
    flag.chain.push_back(lower);
  }
  return flag;
}

}  // namespace

Flag composition_flag(const FiniteSemigroup& s, const MatrixRep& rep) {
  Flag flag = rep.field->rational() ? flag_rational(s, rep) : flag_finite(s, rep);
  flag.check_invariant(rep);
  return flag;
}

BlockForm block_form(const FiniteSemigroup& s, const MatrixRep& rep, const Flag& flag) {
  const Field* f = rep.field;
  int d = rep.dim;

  // Piece bases, deepest subspace first.
  std::vector<std::vector<Vec>> pieces;
  Subspace lower(f, d);
  for (const auto& sub : flag.chain) {
    std::vector<Vec> piece;
    Subspace probe = lower;
    for (const auto& row : sub.basis()) {
      Vec res = lower.reduce(row);
      if (probe.insert(res)) piece.push_back(std::move(res));
    }
    pieces.push_back(std::move(piece));
    lower = sub;
  }
  if (lower.dim() != d) throw Error("flag does not end at the full space");

  // New basis: top quotient pieces first, so invariance puts zeros below the
  // diagonal blocks.
  BlockForm out;
  out.basis_change = Mat(f, d, d);
  int row = 0;
  std::vector<std::pair<int, int>> spans;  // offset, size per block (top-left first)
  for (std::size_t t = pieces.size(); t-- > 0;) {
    spans.emplace_back(row, static_cast<int>(pieces[t].size()));
    for (const auto& v : pieces[t]) out.basis_change.set_row(row++, v);
  }
  out.basis_change_inv = inverse(out.basis_change);

  for (const Mat& img : rep.images)
    out.conjugated.push_back(out.basis_change * img * out.basis_change_inv);

  // Verify block upper triangular.
  for (const Mat& m : out.conjugated)
    for (auto [off, size] : spans)
      for (int i = off; i < off + size; ++i)
        for (int j = 0; j < off; ++j)
          if (!ops::is_zero(f, m.at(i, j)))
            throw Error("conjugated image is not block upper triangular");

  // Diagonal block monoids.
  for (auto [off, size] : spans) {
    DiagonalBlock block;
    block.offset = off;
    block.size = size;
    std::vector<Mat> distinct;
    std::vector<int> reps_elt;
    block.morphism.resize(s.order());
    for (int elt = 0; elt < s.order(); ++elt) {
      Mat sub(f, size, size);
      for (int i = 0; i < size; ++i)
        for (int j = 0; j < size; ++j) sub.at(i, j) = out.conjugated[elt].at(off + i, off + j);
      int id = -1;
      for (std::size_t k = 0; k < distinct.size(); ++k)
        if (distinct[k] == sub) {
          id = static_cast<int>(k);
          break;
        }
      if (id == -1) {
        id = static_cast<int>(distinct.size());
        distinct.push_back(sub);
        reps_elt.push_back(elt);
      }
      block.images.push_back(std::move(sub));
      block.morphism[elt] = id;
    }
    int m = static_cast<int>(distinct.size());
    std::vector<std::vector<int>> table(m, std::vector<int>(m));
    for (int a = 0; a < m; ++a)
      for (int b = 0; b < m; ++b)
        table[a][b] = block.morphism[s.product(reps_elt[a], reps_elt[b])];
    block.monoid = FiniteSemigroup::from_cayley_table(m, std::move(table));
    out.blocks.push_back(std::move(block));
  }
  return out;
}

namespace {

// Candidate eigenvalues for images of a finite semigroup: roots of
// x^a (x^b - 1) that lie in the field.
std::vector<Scalar> eigen_candidates(const Field* f, TriangularMode mode) {
  std::vector<Scalar> out;
  if (mode == TriangularMode::Unitriangular) {
    out.push_back(ops::from_int(f, 0));
    out.push_back(ops::from_int(f, 1));
    return out;
  }
  if (f->rational()) {
    out.push_back(ops::from_int(f, 0));
    out.push_back(ops::from_int(f, 1));
    out.push_back(ops::from_int(f, -1));
  } else {
    for (unsigned v = 0; v < f->size(); ++v) {
      Scalar s;
      s.ff = v;
      out.push_back(s);
    }
  }
  return out;
}

// Largest invariant subspace contained in E.
Subspace invariant_core(const Field* f, Subspace u, const std::vector<Mat>& acts) {
  int amb = u.ambient();
  bool shrunk = true;
  while (shrunk && u.dim() > 0) {
    shrunk = false;
    for (const Mat& a : acts) {
      // Residue-coordinate map of u.
      std::vector<int> nonpivot;
      for (int j = 0; j < amb; ++j)
        if (!std::binary_search(u.pivots().begin(), u.pivots().end(), j))
          nonpivot.push_back(j);
      Mat rm(f, amb, static_cast<int>(nonpivot.size()));
      for (int i = 0; i < amb; ++i) {
        Vec e(amb, ops::zero(f));
        e[i] = ops::one(f);
        Vec res = u.reduce(e);
        for (std::size_t j = 0; j < nonpivot.size(); ++j)
          rm.at(i, static_cast<int>(j)) = res[nonpivot[j]];
      }
      Subspace pre(f, amb);
      for (const Vec& v : left_kernel(a * rm)) pre.insert(v);
      Subspace meet = Subspace::intersect(u, pre);
      if (meet.dim() < u.dim()) {
        u = std::move(meet);
        shrunk = true;
      }
    }
  }
  return u;
}

// A line spanned by a common eigenvector of all actions with eigenvalues
// restricted to the candidate set, or nullopt.
std::optional<Vec> find_line(const Field* f, std::vector<Mat> acts,
                             const std::vector<Scalar>& candidates) {
  int k = acts.empty() ? 0 : acts[0].rows();
  if (k == 0) return std::nullopt;
  const Mat* pivot_act = nullptr;
  for (const Mat& a : acts)
    if (!a.is_scalar()) {
      pivot_act = &a;
      break;
    }
  if (!pivot_act) {
    Vec e(k, ops::zero(f));
    e[0] = ops::one(f);
    return e;
  }
  for (const Scalar& lambda : candidates) {
    Mat shifted = *pivot_act;
    for (int i = 0; i < k; ++i) shifted.at(i, i) = ops::sub(f, shifted.at(i, i), lambda);
    Subspace eig(f, k);
    for (const Vec& v : left_kernel(shifted)) eig.insert(v);
    if (eig.dim() == 0) continue;
    Subspace core = invariant_core(f, eig, acts);
    if (core.dim() == 0) continue;
    // Recurse inside the core.
    CoordSolver solver(f, core.basis());
    std::vector<Mat> restricted;
    for (const Mat& a : acts) {
      Mat r(f, core.dim(), core.dim());
      for (int i = 0; i < core.dim(); ++i)
        r.set_row(i, solver.express(vec_mat(f, core.basis()[i], a)));
      restricted.push_back(std::move(r));
    }
    auto inner = find_line(f, std::move(restricted), candidates);
    if (!inner) continue;
    Vec v(k, ops::zero(f));
    for (int i = 0; i < core.dim(); ++i)
      v = vec_add(f, v, vec_scaled(f, core.basis()[i], (*inner)[i]));
    return v;
  }
  return std::nullopt;
}

}  // namespace

Triangularization triangularize(const FiniteSemigroup& s, const FieldSpec& spec,
                                TriangularMode mode) {
  RepReport report = classify_representability(s, spec);
  bool granted = mode == TriangularMode::Triangular ? report.triangularizable
                                                    : report.unitriangularizable;
  if (!granted)
    throw Refusal(mode == TriangularMode::Triangular ? report.witness_triangularizable
                                                     : report.witness_unitriangularizable);

  const Field* f = Field::for_spec(spec);
  MatrixRep rep = regular_representation(s, f);
  int d = rep.dim;
  auto candidates = eigen_candidates(f, mode);

  // Build the flag one common eigenline at a time.
  std::vector<std::vector<Vec>> pieces;  // each a single global vector
  Subspace lower(f, d);
  while (lower.dim() < d) {
    std::vector<Vec> reps;
    Subspace probe = lower;
    for (int i = 0; i < d; ++i) {
      Vec e(d, ops::zero(f));
      e[i] = ops::one(f);
      Vec res = lower.reduce(e);
      if (probe.insert(res)) reps.push_back(std::move(res));
    }
    int k = static_cast<int>(reps.size());
    CoordSolver solver(f, reps);
    std::vector<Mat> qacts;
    for (const Mat& img : rep.images) {
      Mat m(f, k, k);
      for (int i = 0; i < k; ++i)
        m.set_row(i, solver.express(lower.reduce(vec_mat(f, reps[i], img))));
      bool dup = false;
      for (const Mat& a : qacts)
        if (a == m) {
          dup = true;
          break;
        }
      if (!dup) qacts.push_back(std::move(m));
    }
    auto line = find_line(f, qacts, candidates);
    if (!line)
      throw Error("internal: classification granted the flag but no common "
                  "eigenvector was found");
    Vec v(d, ops::zero(f));
    for (int i = 0; i < k; ++i) v = vec_add(f, v, vec_scaled(f, reps[i], (*line)[i]));
    pieces.push_back({v});
    lower.insert(v);
  }

  Triangularization out;
  out.basis_change = Mat(f, d, d);
  int row = 0;
  for (std::size_t t = pieces.size(); t-- > 0;)
    for (const auto& v : pieces[t]) out.basis_change.set_row(row++, v);
  out.basis_change_inv = inverse(out.basis_change);
  for (const Mat& img : rep.images)
    out.images.push_back(out.basis_change * img * out.basis_change_inv);

  // Entrywise verification.
  for (const Mat& m : out.images) {
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < i; ++j)
        if (!ops::is_zero(f, m.at(i, j))) throw Error("triangularization unsound");
    if (mode == TriangularMode::Unitriangular)
      for (int i = 0; i < d; ++i) {
        const Scalar& c = m.at(i, i);
        if (!ops::is_zero(f, c) && !ops::eq(f, c, ops::one(f)))
          throw Error("unitriangular diagonal entry outside {0,1}");
      }
  }
  return out;
}

std::pair<bool, int> span_ideal_nilpotent(const MatrixRep& rep,
                                          const std::vector<Mat>& spanning) {
  const Field* f = rep.field;
  int d = rep.dim;
  auto acts = action_set(rep);

  Subspace ideal(f, d * d);
  for (const Mat& m : spanning) ideal.insert(m.flatten());
  // Close to a two-sided ideal of the enveloping algebra.
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<Vec> rows = ideal.basis();
    for (const auto& row : rows) {
      Mat x = Mat::unflatten(f, d, d, row);
      for (const Mat& a : acts) {
        if (ideal.insert((a * x).flatten())) grew = true;
        if (ideal.insert((x * a).flatten())) grew = true;
      }
    }
  }

  if (ideal.dim() == 0) return {true, 1};
  std::vector<Mat> gens;
  for (const auto& row : ideal.basis()) gens.push_back(Mat::unflatten(f, d, d, row));

  Subspace power = ideal;
  for (int k = 1; k <= d + 1; ++k) {
    Subspace next(f, d * d);
    for (const auto& row : power.basis()) {
      Mat x = Mat::unflatten(f, d, d, row);
      for (const Mat& y : gens) next.insert((x * y).flatten());
    }
    if (next.dim() == 0) return {true, k + 1};
    if (next == power) return {false, -1};
    power = std::move(next);
  }
  return {false, -1};
}

}  // namespace fsemi
