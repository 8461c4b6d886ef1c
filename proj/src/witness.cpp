#include "invgen/witness.hpp"

#include <algorithm>

namespace invgen {

namespace {

constexpr int kVectorTries = 64;
constexpr int kAttempts = 16;
constexpr int kSubsetGuard = 20;

void check_ambient(const BilinearSpace& space, const Subspace& w) {
  if (static_cast<int>(w.ambient_dim()) != space.dim() ||
      w.field() != space.field())
    fail(Errc::AmbientMismatch, "subspace does not live in this space");
}

}  // namespace

std::vector<Subspace> six_set(const BilinearSpace& space, const Subspace& w) {
  const FieldSpec& f = space.field();
  int n = space.dim();
  Subspace wp = perp(space, w);
  LatticeResult lat = lattice(w, wp);
  std::vector<Subspace> out{Subspace::zero(f, n), lat.intersection, w, wp,
                            lat.sum, Subspace::full(f, n)};
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Subspace> eig_invariant_subspaces(const Matrix& a) {
  if (!a.is_square()) fail(Errc::InvalidInput, "expected a square matrix");
  int n = static_cast<int>(a.rows());
  if (n > kSubsetGuard)
    fail(Errc::EnumerationTooLarge, "2^n subspace enumeration capped at n=20");
  const FieldSpec& f = a.field();
  Poly chi = Poly::char_poly(a);
  SplitResult split = distinct_root_split(chi);
  if (!split.distinct || !split.split)
    fail(Errc::EigenvaluesNotDistinctOrNotRational,
         split.distinct ? "characteristic polynomial does not split"
                        : "repeated eigenvalue");
  std::vector<Vec> eigvecs;
  for (const Scalar& lam : split.roots) {
    Matrix shifted = a - Matrix::identity(f, n).scaled(lam);
    Subspace ker = kernel(shifted);
    if (ker.dim() != 1)
      fail(Errc::EigenvaluesNotDistinctOrNotRational, "eigenspace not a line");
    eigvecs.push_back(ker.basis().row(0));
  }
  std::vector<Subspace> out;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    std::vector<Vec> rows;
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) rows.push_back(eigvecs[i]);
    out.push_back(Subspace::span_rows(f, n, rows));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

namespace {

// span of the rows selected by `mask`
Subspace subset_span(const FieldSpec& f, int n, const std::vector<Vec>& rows,
                     std::uint32_t mask) {
  std::vector<Vec> sel;
  for (std::size_t i = 0; i < rows.size(); ++i)
    if (mask & (1u << i)) sel.push_back(rows[i]);
  return Subspace::span_rows(f, n, sel);
}

bool subordinate_to(const std::vector<Vec>& rows, const Subspace& target) {
  std::size_t inside = 0;
  for (const auto& r : rows)
    if (target.contains(r)) ++inside;
  return inside == target.dim();
}

struct GoodContext {
  const BilinearSpace& space;
  std::vector<Subspace> allowed;      // the six-set
  std::vector<Subspace> very_allowed; // {Iso, W, W^perp, W+W^perp, V}
  Subspace iso;
  Subspace w;
};

bool in_list(const std::vector<Subspace>& list, const Subspace& u) {
  return std::binary_search(list.begin(), list.end(), u);
}

// The "good" predicate of the long lemma, checked directly on a linearly
// independent set of rows; with `very` also the refined stage-one condition.
bool set_is_good(const GoodContext& ctx, const std::vector<Vec>& rows,
                 bool very) {
  const FieldSpec& f = ctx.space.field();
  int n = ctx.space.dim();
  for (std::uint32_t mask = 0; mask < (1u << rows.size()); ++mask) {
    Subspace u = subset_span(f, n, rows, mask);
    Subspace up = perp(ctx.space, u);
    if (subordinate_to(rows, up) && !in_list(ctx.allowed, u)) return false;
    if (very && u.contains(ctx.iso) && !in_list(ctx.very_allowed, u)) {
      Subspace meet = lattice(up, ctx.w).intersection;
      if (subordinate_to(rows, meet)) return false;
    }
  }
  return true;
}

}  // namespace

bool is_good_basis(const BilinearSpace& space, const GoodBasis& gb,
                   const Subspace& w) {
  check_ambient(space, w);
  int n = space.dim();
  if (n > kSubsetGuard)
    fail(Errc::EnumerationTooLarge, "2^n subspace enumeration capped at n=20");
  if (static_cast<int>(gb.basis.rows.rows()) != n) return false;
  std::vector<Vec> rows;
  for (int i = 0; i < n; ++i) rows.push_back(gb.basis.rows.row(i));
  if (Subspace::span(gb.basis.rows).dim() != static_cast<std::size_t>(n))
    return false;

  const FieldSpec& f = space.field();
  Subspace iso = iso_radical(space, w).radical;
  Subspace wp = perp(space, w);
  auto slice = [&](int from, int count) {
    std::vector<Vec> part(rows.begin() + from, rows.begin() + from + count);
    return Subspace::span_rows(f, n, part);
  };
  int b0 = gb.stage_sizes[0], b1 = gb.stage_sizes[1], b2 = gb.stage_sizes[2];
  if (b0 + b1 + b2 + gb.stage_sizes[3] != n) return false;
  if (slice(0, b0) != iso) return false;
  if (slice(0, b0 + b1) != w) return false;
  std::vector<Vec> wperp_rows(rows.begin(), rows.begin() + b0);
  wperp_rows.insert(wperp_rows.end(), rows.begin() + b0 + b1,
                    rows.begin() + b0 + b1 + b2);
  if (Subspace::span_rows(f, n, wperp_rows) != wp) return false;

  GoodContext ctx{space, six_set(space, w), {}, iso, w};
  return set_is_good(ctx, rows, false);
}

GoodBasis good_basis(const BilinearSpace& space, const Subspace& w,
                     std::uint64_t seed) {
  check_ambient(space, w);
  int n = space.dim();
  if (n > kSubsetGuard)
    fail(Errc::EnumerationTooLarge, "2^n subspace enumeration capped at n=20");
  const FieldSpec& f = space.field();

  Subspace iso = iso_radical(space, w).radical;
  Subspace wp = perp(space, w);
  LatticeResult lat = lattice(w, wp);
  GoodContext ctx{space, six_set(space, w), {}, iso, w};
  ctx.very_allowed = {iso, w, wp, lat.sum, Subspace::full(f, n)};
  std::sort(ctx.very_allowed.begin(), ctx.very_allowed.end());
  ctx.very_allowed.erase(
      std::unique(ctx.very_allowed.begin(), ctx.very_allowed.end()),
      ctx.very_allowed.end());

  for (int attempt = 0; attempt < kAttempts; ++attempt) {
    Rng rng = Rng::keyed(seed, attempt);
    std::vector<Vec> rows;
    for (std::size_t i = 0; i < iso.dim(); ++i) rows.push_back(iso.basis().row(i));
    GoodBasis gb;
    gb.stage_sizes[0] = static_cast<int>(iso.dim());

    // stage spaces and the invariant each stage must keep
    struct Stage {
      const Subspace* sample_from;
      const Subspace* until;  // extend until span(rows) == *until
      bool very;
    };
    Subspace full = Subspace::full(f, n);
    Stage stages[3] = {{&w, &w, true}, {&wp, &lat.sum, false}, {&full, &full, false}};

    bool ok = true;
    for (int s = 0; s < 3 && ok; ++s) {
      int added = 0;
      while (Subspace::span_rows(f, n, rows) != *stages[s].until) {
        bool accepted = false;
        for (int t = 0; t < kVectorTries && !accepted; ++t) {
          Vec coeffs = rng.uniform_vec(f, stages[s].sample_from->dim());
          Vec cand(n, Scalar::zero(f));
          for (std::size_t i = 0; i < coeffs.size(); ++i)
            cand = vec_add(cand,
                           vec_scaled(stages[s].sample_from->basis().row(i),
                                      coeffs[i]));
          if (Subspace::span_rows(f, n, rows).contains(cand)) continue;
          rows.push_back(cand);
          if (set_is_good(ctx, rows, stages[s].very)) {
            accepted = true;
            ++added;
          } else {
            rows.pop_back();
          }
        }
        if (!accepted) {
          ok = false;
          break;
        }
      }
      gb.stage_sizes[s + 1] = added;
    }
    if (!ok) continue;
    gb.stage_sizes[3] = n - gb.stage_sizes[0] - gb.stage_sizes[1] -
                        gb.stage_sizes[2];
    gb.basis.rows = Matrix::from_row_vectors(f, n, rows);
    if (is_good_basis(space, gb, w)) return gb;
  }
  fail(Errc::FieldTooSmall,
       "no good basis found within the retry budget; the generic sets may be "
       "empty over this field");
}

namespace {

Matrix companion(const Poly& f) {
  const FieldSpec& fs = f.field();
  int m = f.degree();
  Matrix c(fs, m, m);
  for (int i = 1; i < m; ++i) c(i, i - 1) = Scalar::one(fs);
  for (int i = 0; i < m; ++i) c(i, m - 1) = -f.coeff(i);
  return c;
}

Matrix eval_poly_at(const Poly& f, const Matrix& a) {
  const FieldSpec& fs = a.field();
  std::size_t n = a.rows();
  Matrix acc(fs, n, n);
  Matrix power = Matrix::identity(fs, n);
  for (int i = 0; i <= f.degree(); ++i) {
    if (!f.coeff(i).is_zero()) acc = acc + power.scaled(f.coeff(i));
    if (i < f.degree()) power = power * a;
  }
  return acc;
}

// Matrix acting on row vectors so that basis row i maps to the linear
// combination described by coordinate matrix M': A = B^T M' B^{-T}.
Matrix conjugate_from_coords(const Matrix& basis_rows, const Matrix& coords) {
  Matrix bt = basis_rows.transpose();
  return bt * coords * bt.inverse();
}

// Skew strata where no good basis exists over any field: d - l = 2,
// n - d - l = 2 (both orientations of the forced totally isotropic pair) and
// the n = 2 plane itself.
bool skew_needs_companion_fallback(FormKind kind, int n, int d, int l) {
  if (kind != FormKind::Skew) return false;
  return n == 2 || d - l == 2 || n - d - l == 2;
}

GeneratorTuple companion_block_witness(const BilinearSpace& space,
                                       const Subspace& w, int r,
                                       std::uint64_t seed) {
  const FieldSpec& f = space.field();
  int n = space.dim();
  DecompositionBasis db = decompose_basis(space, w);
  int l = static_cast<int>(db.iso.rows());
  int da = static_cast<int>(db.wa.rows());
  int dbk = static_cast<int>(db.wb.rows());
  Matrix basis = db.iso.vstack(db.wa).vstack(db.wb).vstack(db.c);

  if (n == 2) {
    // lone Jordan block: invariant lattice is the chain 0 < W < V
    Matrix coords = Matrix::from_rows(f, {{1, 1}, {0, 1}});
    Matrix a1 = conjugate_from_coords(basis, coords);
    std::vector<Matrix> mats{a1};
    for (int i = 1; i < r; ++i) mats.emplace_back(f, n, n);
    return GeneratorTuple(space, std::move(mats));
  }

  // distinct irreducible blocks per decomposition component
  std::vector<Poly> used;
  auto pick = [&](int degree) {
    Poly p = monic_irreducible(f, degree, used);
    used.push_back(p);
    return p;
  };
  Poly f0(f), fa(f), fb(f), f3(f);
  if (l > 0) f0 = pick(l);
  if (da > 0) fa = pick(da);
  if (dbk > 0) fb = pick(dbk);
  if (l > 0) f3 = pick(l);

  auto block_offset = [&](int which) {
    switch (which) {
      case 0: return 0;
      case 1: return l;
      case 2: return l + da;
      default: return l + da + dbk;
    }
  };
  int sizes[4] = {l, da, dbk, l};
  const Poly* polys[4] = {&f0, &fa, &fb, &f3};
  // block columns that may be filled freely: (row block, col block)
  const std::pair<int, int> free_blocks[] = {{0, 1}, {0, 2}, {0, 3},
                                             {1, 3}, {2, 3}};

  std::vector<Subspace> expected = six_set(space, w);
  for (int attempt = 0; attempt < kAttempts; ++attempt) {
    Rng rng = Rng::keyed(seed, 0xC0FFEE + attempt);
    Matrix coords(f, n, n);
    for (int b = 0; b < 4; ++b) {
      if (sizes[b] == 0) continue;
      Matrix comp = companion(*polys[b]);
      for (int i = 0; i < sizes[b]; ++i)
        for (int j = 0; j < sizes[b]; ++j)
          coords(block_offset(b) + i, block_offset(b) + j) = comp(i, j);
    }
    for (auto [rb, cb] : free_blocks) {
      for (int i = 0; i < sizes[rb]; ++i)
        for (int j = 0; j < sizes[cb]; ++j)
          coords(block_offset(rb) + i, block_offset(cb) + j) =
              rng.uniform_scalar(f);
    }
    Matrix a1 = conjugate_from_coords(basis, coords);

    // primary components; the invariant lattice is exactly their sums
    std::vector<Subspace> comps;
    for (int b = 0; b < 4; ++b) {
      if (sizes[b] == 0) continue;
      comps.push_back(kernel(eval_poly_at(*polys[b], a1)));
    }
    std::vector<Subspace> sums;
    for (std::uint32_t mask = 0; mask < (1u << comps.size()); ++mask) {
      Matrix rows(f, 0, n);
      for (std::size_t i = 0; i < comps.size(); ++i)
        if (mask & (1u << i)) rows = rows.vstack(comps[i].basis());
      sums.push_back(Subspace::span(rows));
    }
    std::sort(sums.begin(), sums.end());
    std::vector<Subspace> rho_invariant;
    for (const auto& u : sums)
      if (std::binary_search(sums.begin(), sums.end(), perp(space, u)))
        rho_invariant.push_back(u);
    if (rho_invariant == expected) {
      std::vector<Matrix> mats{a1};
      for (int i = 1; i < r; ++i) mats.emplace_back(f, n, n);
      return GeneratorTuple(space, std::move(mats));
    }
  }
  fail(Errc::FieldTooSmall,
       "companion-block witness construction exhausted its retry budget");
}

}  // namespace

GeneratorTuple witness_tuple(const BilinearSpace& space, const Subspace& w,
                             int r, std::uint64_t seed) {
  check_ambient(space, w);
  if (r < 1) fail(Errc::InvalidInput, "r must be positive");
  const FieldSpec& f = space.field();
  int n = space.dim();
  SubspaceProfile prof = profile_of(space, w);

  if (skew_needs_companion_fallback(space.kind(), n, prof.d, prof.l))
    return companion_block_witness(space, w, r, seed);

  if (f.is_prime_field() && f.p <= n)
    fail(Errc::FieldTooSmall,
         "need at least " + std::to_string(n) + " distinct nonzero eigenvalues");
  GoodBasis gb = good_basis(space, w, seed);
  Matrix diag(f, n, n);
  for (int i = 0; i < n; ++i) diag(i, i) = Scalar::of(f, i + 1);
  Matrix a1 = conjugate_from_coords(gb.basis.rows, diag);
  std::vector<Matrix> mats{a1};
  for (int i = 1; i < r; ++i) mats.emplace_back(f, n, n);
  return GeneratorTuple(space, std::move(mats));
}

GeneratorTuple sample_zwr(const BilinearSpace& space, const Subspace& w, int r,
                          std::uint64_t seed) {
  check_ambient(space, w);
  if (r < 1) fail(Errc::InvalidInput, "r must be positive");
  const FieldSpec& f = space.field();
  int n = space.dim();
  DecompositionBasis db = decompose_basis(space, w);
  int l = static_cast<int>(db.iso.rows());
  int da = static_cast<int>(db.wa.rows());
  int dbk = static_cast<int>(db.wb.rows());
  Matrix basis = db.iso.vstack(db.wa).vstack(db.wb).vstack(db.c);

  std::vector<Matrix> mats;
  Rng rng = Rng::keyed(seed, 0x5A3);
  for (int k = 0; k < r; ++k) {
    Matrix coords(f, n, n);
    auto fill = [&](int r0, int rc, int c0, int cc) {
      for (int i = 0; i < rc; ++i)
        for (int j = 0; j < cc; ++j)
          coords(r0 + i, c0 + j) = rng.uniform_scalar(f);
    };
    int off_iso = 0, off_wa = l, off_wb = l + da, off_c = l + da + dbk;
    fill(off_iso, l, 0, n);              // Iso rows: everything
    fill(off_wa, da, off_wa, da);        // Wa rows: Wa and C columns
    fill(off_wa, da, off_c, l);
    fill(off_wb, dbk, off_wb, dbk);      // Wb rows: Wb and C columns
    fill(off_wb, dbk, off_c, l);
    fill(off_c, l, off_c, l);            // C rows: C column only
    mats.push_back(conjugate_from_coords(basis, coords));
  }
  return GeneratorTuple(space, std::move(mats));
}

}  // namespace invgen
