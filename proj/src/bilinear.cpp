#include "invgen/bilinear.hpp"

namespace invgen {

namespace {

void check_ambient(const BilinearSpace& space, const Subspace& w) {
  if (static_cast<int>(w.ambient_dim()) != space.dim() ||
      w.field() != space.field())
    fail(Errc::AmbientMismatch, "subspace does not live in this space");
}

}  // namespace

BilinearSpace::BilinearSpace(FormKind kind, Matrix gram)
    : kind_(kind), gram_(std::move(gram)) {
  if (!gram_.is_square()) fail(Errc::InvalidInput, "gram: not square");
  Matrix t = gram_.transpose();
  if (kind_ == FormKind::Symmetric) {
    if (t != gram_) fail(Errc::InvalidInput, "gram: not symmetric");
  } else {
    if (t != gram_.scaled(-Scalar::one(gram_.field())))
      fail(Errc::InvalidInput, "gram: not skew-symmetric");
    if (gram_.rows() % 2 != 0)
      fail(Errc::InvalidInput, "skew form needs even dimension");
  }
  try {
    gram_inv_ = gram_.inverse();
  } catch (const Error&) {
    fail(Errc::InvalidInput, "gram: singular");
  }
}

Matrix BilinearSpace::standard_skew_gram(const FieldSpec& f, int n) {
  if (n % 2 != 0) fail(Errc::InvalidInput, "skew form needs even dimension");
  Matrix q(f, n, n);
  for (int i = 0; i < n; i += 2) {
    q(i, i + 1) = -Scalar::one(f);
    q(i + 1, i) = Scalar::one(f);
  }
  return q;
}

BilinearSpace BilinearSpace::standard(const FieldSpec& f, FormKind kind,
                                      int n) {
  if (kind == FormKind::Symmetric)
    return BilinearSpace(kind, Matrix::identity(f, n));
  return BilinearSpace(kind, standard_skew_gram(f, n));
}

Scalar BilinearSpace::inner(const Vec& v, const Vec& w) const {
  if (static_cast<int>(v.size()) != dim() ||
      static_cast<int>(w.size()) != dim())
    fail(Errc::AmbientMismatch, "vector length mismatch in inner product");
  return dot(v, apply(gram_, w));
}

Matrix BilinearSpace::adjoint(const Matrix& a) const {
  if (!a.is_square() || static_cast<int>(a.rows()) != dim() ||
      a.field() != field())
    fail(Errc::AmbientMismatch, "adjoint needs an n x n matrix over the space's field");
  return gram_inv_ * a.transpose() * gram_;
}

Subspace perp(const BilinearSpace& space, const Subspace& w) {
  check_ambient(space, w);
  if (w.dim() == 0) return Subspace::full(space.field(), space.dim());
  return kernel(w.basis() * space.gram());
}

IsoRadical iso_radical(const BilinearSpace& space, const Subspace& w) {
  check_ambient(space, w);
  Subspace rad = lattice(w, perp(space, w)).intersection;
  int rank = static_cast<int>(rad.dim());
  return {std::move(rad), rank};
}

SubspaceProfile profile_of(const BilinearSpace& space, const Subspace& w) {
  return {static_cast<int>(w.dim()), iso_radical(space, w).rank};
}

Matrix hyperbolic_complement_rows(const BilinearSpace& space,
                                  const Matrix& iso_rows,
                                  const Matrix& ortho_rows) {
  const FieldSpec& f = space.field();
  std::size_t n = space.dim();
  std::size_t k = iso_rows.rows();
  Matrix built(f, 0, n);
  Scalar half = Scalar::of(f, 2).inverse();
  for (std::size_t i = 0; i < k; ++i) {
    Matrix sys = (iso_rows * space.gram())
                     .vstack(built.rows() ? built * space.gram() : Matrix(f, 0, n))
                     .vstack(ortho_rows.rows() ? ortho_rows * space.gram()
                                               : Matrix(f, 0, n));
    Vec rhs(sys.rows(), Scalar::zero(f));
    rhs[i] = Scalar::one(f);
    auto sol = solve(sys, rhs);
    if (!sol)
      fail(Errc::NotTotallyIsotropic,
           "no hyperbolic partner; the given rows are not an isotropic "
           "radical of a valid configuration");
    Vec c = *sol;
    // <c', c'> = 2 lambda; c = c' - lambda b_i keeps the pairing and is isotropic
    Scalar lambda = space.inner(c, c) * half;
    if (!lambda.is_zero()) c = vec_sub(c, vec_scaled(iso_rows.row(i), lambda));
    built = built.vstack(Matrix::from_row_vectors(f, n, {c}));
  }
  return built;
}

Subspace hyperbolic_complement(const BilinearSpace& space, const Subspace& w) {
  check_ambient(space, w);
  if (iso_radical(space, w).rank != static_cast<int>(w.dim()))
    fail(Errc::NotTotallyIsotropic, "subspace is not totally isotropic");
  if (w.dim() == 0) return Subspace::zero(space.field(), space.dim());
  Matrix rows = hyperbolic_complement_rows(space, w.basis(),
                                           Matrix(space.field(), 0, space.dim()));
  return Subspace::span(rows);
}

DecompositionBasis decompose_basis(const BilinearSpace& space,
                                   const Subspace& w) {
  check_ambient(space, w);
  Subspace iso = iso_radical(space, w).radical;
  Matrix wa = completion_rows(iso, w);
  Subspace wperp = perp(space, w);
  Matrix wb = completion_rows(iso, wperp);
  Matrix c = iso.dim() == 0
                 ? Matrix(space.field(), 0, space.dim())
                 : hyperbolic_complement_rows(space, iso.basis(), wa.vstack(wb));
  return {iso.basis(), std::move(wa), std::move(wb), std::move(c)};
}

Decomposition decompose(const BilinearSpace& space, const Subspace& w) {
  DecompositionBasis db = decompose_basis(space, w);
  return {Subspace::span(db.iso), Subspace::span(db.wa), Subspace::span(db.wb),
          Subspace::span(db.c)};
}

Matrix OrderedBasis::gram_in_basis(const BilinearSpace& space) const {
  return rows * space.gram() * rows.transpose();
}

namespace {

std::vector<Vec> matrix_rows(const Matrix& m) {
  std::vector<Vec> rows;
  for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(m.row(i));
  return rows;
}

// Diagonalize the form restricted to the span of `rows` (symmetric case,
// nondegenerate restriction).  Returns the new rows and their norms.
std::pair<std::vector<Vec>, std::vector<Scalar>> diagonalize_sym(
    const BilinearSpace& space, const Matrix& rows) {
  std::vector<Vec> pool = matrix_rows(rows);
  std::vector<Vec> out;
  std::vector<Scalar> norms;
  while (!pool.empty()) {
    std::size_t idx = pool.size();
    for (std::size_t i = 0; i < pool.size(); ++i) {
      if (!space.inner(pool[i], pool[i]).is_zero()) {
        idx = i;
        break;
      }
    }
    if (idx == pool.size()) {
      // all isotropic: some cross pairing is nonzero by nondegeneracy
      bool fixed = false;
      for (std::size_t i = 0; i < pool.size() && !fixed; ++i)
        for (std::size_t j = i + 1; j < pool.size() && !fixed; ++j)
          if (!space.inner(pool[i], pool[j]).is_zero()) {
            pool[i] = vec_add(pool[i], pool[j]);
            idx = i;
            fixed = true;
          }
      if (!fixed)
        fail(Errc::InvalidInput, "degenerate block in diagonalization");
    }
    Vec v = pool[idx];
    pool.erase(pool.begin() + idx);
    Scalar norm = space.inner(v, v);
    for (auto& u : pool) {
      Scalar c = space.inner(v, u) / norm;
      if (!c.is_zero()) u = vec_sub(u, vec_scaled(v, c));
    }
    out.push_back(std::move(v));
    norms.push_back(std::move(norm));
  }
  return {std::move(out), std::move(norms)};
}

// Standard symplectic pair reduction: output rows come in pairs (u, v) with
// <u, v> = -1 and distinct pairs orthogonal, i.e. Gram Omega_{2k}.
std::vector<Vec> symplectic_pairs(const BilinearSpace& space,
                                  const Matrix& rows) {
  std::vector<Vec> pool = matrix_rows(rows);
  std::vector<Vec> out;
  while (!pool.empty()) {
    Vec u = pool.front();
    pool.erase(pool.begin());
    std::size_t j = pool.size();
    for (std::size_t i = 0; i < pool.size(); ++i) {
      if (!space.inner(u, pool[i]).is_zero()) {
        j = i;
        break;
      }
    }
    if (j == pool.size())
      fail(Errc::InvalidInput, "degenerate block in symplectic reduction");
    Scalar c = space.inner(u, pool[j]);
    Vec v = vec_scaled(pool[j], -c.inverse());  // <u, v> = -1
    pool.erase(pool.begin() + j);
    for (auto& w : pool) {
      Scalar alpha = -space.inner(v, w);
      Scalar beta = space.inner(u, w);
      if (!alpha.is_zero()) w = vec_add(w, vec_scaled(u, alpha));
      if (!beta.is_zero()) w = vec_add(w, vec_scaled(v, beta));
    }
    out.push_back(std::move(u));
    out.push_back(std::move(v));
  }
  return out;
}

Matrix blocked_target_gram(const BilinearSpace& space, int n, int l,
                           const std::vector<Scalar>& middle_diag,
                           bool weak) {
  const FieldSpec& f = space.field();
  Matrix t(f, n, n);
  int mid = n - 2 * l;
  Scalar e = space.kind() == FormKind::Symmetric ? Scalar::one(f)
                                                 : -Scalar::one(f);
  for (int i = 0; i < l; ++i) {
    t(i, n - l + i) = e;
    t(n - l + i, i) = Scalar::one(f);
  }
  if (space.kind() == FormKind::Symmetric) {
    for (int i = 0; i < mid; ++i)
      t(l + i, l + i) = weak ? middle_diag[i] : Scalar::one(f);
  } else {
    for (int i = 0; i < mid; i += 2) {
      t(l + i, l + i + 1) = -Scalar::one(f);
      t(l + i + 1, l + i) = Scalar::one(f);
    }
  }
  return t;
}

}  // namespace

NiceBasis nice_basis(const BilinearSpace& space, const Subspace& w,
                     BasisLayout layout, bool weak) {
  check_ambient(space, w);
  if (layout == BasisLayout::Interleaved && space.kind() != FormKind::Skew)
    fail(Errc::InvalidInput, "interleaved layout applies to skew forms only");
  const FieldSpec& f = space.field();
  int n = space.dim();
  DecompositionBasis db = decompose_basis(space, w);
  int l = static_cast<int>(db.iso.rows());
  int d = l + static_cast<int>(db.wa.rows());

  std::vector<Vec> wa_rows, wb_rows;
  std::vector<Scalar> middle_diag;
  if (space.kind() == FormKind::Symmetric) {
    auto [wa_d, wa_norms] = diagonalize_sym(space, db.wa);
    auto [wb_d, wb_norms] = diagonalize_sym(space, db.wb);
    wa_rows = std::move(wa_d);
    wb_rows = std::move(wb_d);
    middle_diag = wa_norms;
    middle_diag.insert(middle_diag.end(), wb_norms.begin(), wb_norms.end());
    if (!weak) {
      std::size_t k = 0;
      for (auto* rows : {&wa_rows, &wb_rows}) {
        for (auto& v : *rows) {
          auto root = middle_diag[k].sqrt();
          if (!root)
            fail(Errc::NonSquareScalar,
                 "middle-block norm " + middle_diag[k].str() +
                     " has no square root in " + f.to_string());
          v = vec_scaled(v, root->inverse());
          middle_diag[k] = Scalar::one(f);
          ++k;
        }
      }
    }
  } else {
    wa_rows = symplectic_pairs(space, db.wa);
    wb_rows = symplectic_pairs(space, db.wb);
  }

  std::vector<Vec> c_rows = matrix_rows(db.c);
  if (space.kind() == FormKind::Skew)
    for (auto& c : c_rows) c = vec_scaled(c, -Scalar::one(f));

  NiceBasis nb;
  nb.d = d;
  nb.l = l;
  nb.weak = weak && space.kind() == FormKind::Symmetric;

  if (layout == BasisLayout::Blocked) {
    std::vector<Vec> rows = matrix_rows(db.iso);
    rows.insert(rows.end(), wa_rows.begin(), wa_rows.end());
    rows.insert(rows.end(), wb_rows.begin(), wb_rows.end());
    rows.insert(rows.end(), c_rows.begin(), c_rows.end());
    nb.basis.rows = Matrix::from_row_vectors(f, n, rows);
    nb.target_gram = blocked_target_gram(space, n, l, middle_diag, nb.weak);
    for (int i = 0; i < d; ++i) nb.w_row_indices.push_back(i);
  } else {
    // [u's, iso, u''s | v's, c~'s, v''s] with Gram [[0, -I],[I, 0]]
    int t = static_cast<int>(wa_rows.size()) / 2;
    int s = static_cast<int>(wb_rows.size()) / 2;
    int m = n / 2;
    std::vector<Vec> rows;
    for (int i = 0; i < t; ++i) rows.push_back(wa_rows[2 * i]);
    for (auto& r : matrix_rows(db.iso)) rows.push_back(r);
    for (int i = 0; i < s; ++i) rows.push_back(wb_rows[2 * i]);
    for (int i = 0; i < t; ++i) rows.push_back(wa_rows[2 * i + 1]);
    for (auto& r : c_rows) rows.push_back(r);
    for (int i = 0; i < s; ++i) rows.push_back(wb_rows[2 * i + 1]);
    nb.basis.rows = Matrix::from_row_vectors(f, n, rows);
    Matrix target(f, n, n);
    for (int i = 0; i < m; ++i) {
      target(i, m + i) = -Scalar::one(f);
      target(m + i, i) = Scalar::one(f);
    }
    nb.target_gram = std::move(target);
    for (int i = 0; i < l + t; ++i) nb.w_row_indices.push_back(i);
    for (int i = 0; i < t; ++i) nb.w_row_indices.push_back(m + i);
  }

  if (nb.basis.gram_in_basis(space) != nb.target_gram)
    fail(Errc::FormMismatch, "standard-form reduction did not reach its target");
  return nb;
}

Matrix transporter(const BilinearSpace& space, const Subspace& u,
                   const Subspace& w) {
  check_ambient(space, u);
  check_ambient(space, w);
  SubspaceProfile pu = profile_of(space, u);
  SubspaceProfile pw = profile_of(space, w);
  if (pu.d != pw.d || pu.l != pw.l)
    fail(Errc::ProfileMismatch,
         "subspaces have profiles (" + std::to_string(pu.d) + "," +
             std::to_string(pu.l) + ") vs (" + std::to_string(pw.d) + "," +
             std::to_string(pw.l) + ")");
  NiceBasis nu = nice_basis(space, u, BasisLayout::Blocked);
  NiceBasis nw = nice_basis(space, w, BasisLayout::Blocked);
  if (nu.target_gram != nw.target_gram)
    fail(Errc::FormMismatch, "standard forms disagree over this field");
  return nw.basis.rows.transpose() * nu.basis.rows.transpose().inverse();
}

Subspace transport(const Matrix& g, const Subspace& u) { return image(u, g); }

ProfiledSpace standard_profile(const FieldSpec& f, FormKind kind, int n, int d,
                               int l) {
  if (n < 1 || d < 1 || d > n - 1 || l < 0 || l > std::min(d, n - d) ||
      (kind == FormKind::Skew && (n % 2 != 0 || (d - l) % 2 != 0)))
    fail(Errc::EmptyStratum,
         "no subspace of dimension " + std::to_string(d) + " and isotropy rank " +
             std::to_string(l) + " in a " + std::string(form_name(kind)) +
             " space of dimension " + std::to_string(n));
  Matrix q(f, n, n);
  int mid = n - 2 * l;
  Scalar e = kind == FormKind::Symmetric ? Scalar::one(f) : -Scalar::one(f);
  for (int i = 0; i < l; ++i) {
    q(i, n - l + i) = e;
    q(n - l + i, i) = Scalar::one(f);
  }
  if (kind == FormKind::Symmetric) {
    for (int i = 0; i < mid; ++i) q(l + i, l + i) = Scalar::one(f);
  } else {
    for (int i = 0; i < mid; i += 2) {
      q(l + i, l + i + 1) = -Scalar::one(f);
      q(l + i + 1, l + i) = Scalar::one(f);
    }
  }
  BilinearSpace space(kind, std::move(q));
  Matrix rows(f, d, n);
  for (int i = 0; i < d; ++i) rows(i, i) = Scalar::one(f);
  return {std::move(space), Subspace::span(rows)};
}

}  // namespace invgen
