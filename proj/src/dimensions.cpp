#include "invgen/dimensions.hpp"

#include <algorithm>

namespace invgen {

bool stratum_nonempty(FormKind kind, int n, int d, int l) {
  if (n < 1 || d < 1 || d > n - 1) return false;
  if (l < 0 || l > std::min(d, n - d)) return false;
  if (kind == FormKind::Skew) {
    if (n % 2 != 0) return false;
    if ((d - l) % 2 != 0) return false;
  }
  return true;
}

namespace {

void require_nonempty(FormKind kind, int n, int d, int l) {
  if (!stratum_nonempty(kind, n, d, l))
    fail(Errc::EmptyStratum,
         "stratum (d=" + std::to_string(d) + ", l=" + std::to_string(l) +
             ") is empty for " + std::string(form_name(kind)) + " n=" +
             std::to_string(n));
}

}  // namespace

long long dim_grassmannian(FormKind kind, int n, int d, int l) {
  require_nonempty(kind, n, d, l);
  long long base = static_cast<long long>(d) * (n - d);
  long long ll = static_cast<long long>(l);
  if (kind == FormKind::Symmetric) return base - (ll * ll + ll) / 2;
  return base - (ll * ll - ll) / 2;
}

long long dim_zwr(int n, int d, int l, int r) {
  if (d < 1 || d > n - 1 || l < 0 || l > std::min(d, n - d) || r < 1)
    fail(Errc::EmptyStratum, "invalid (n, d, l, r) for dim Z(W, r; V)");
  long long nd = n - d;
  return static_cast<long long>(r) *
         (nd * nd + static_cast<long long>(d) * d +
          static_cast<long long>(l) * l);
}

long long dim_stratum(const StratumKey& key) {
  require_nonempty(key.kind, key.n, key.d, key.l);
  return dim_grassmannian(key.kind, key.n, key.d, key.l) +
         dim_zwr(key.n, key.d, key.l, key.r);
}

std::vector<CensusRecord> component_census(FormKind kind, int n, int r) {
  if (n < 2) fail(Errc::InvalidInput, "component census needs n >= 2");
  if (kind == FormKind::Skew && n % 2 != 0)
    fail(Errc::InvalidInput, "skew census needs even n");
  std::vector<CensusRecord> out;
  for (int d = 1; d <= n / 2; ++d) {
    CensusRecord rec;
    rec.label = "Z(" + std::to_string(d) + "," + std::to_string(d) + "," +
                std::to_string(r) + ")";
    rec.d = d;
    rec.l = d;
    rec.dim = dim_stratum({kind, n, d, d, r});
    rec.component_count =
        (kind == FormKind::Symmetric && 2 * d == n) ? 2 : 1;
    out.push_back(std::move(rec));
  }
  for (int d = 1; d <= n / 2; ++d) {
    if (kind == FormKind::Skew && d % 2 != 0) continue;
    if (!stratum_nonempty(kind, n, d, 0)) continue;
    CensusRecord rec;
    rec.label = "cl Z(0," + std::to_string(d) + "," + std::to_string(r) + ")";
    rec.d = d;
    rec.l = 0;
    rec.dim = dim_stratum({kind, n, d, 0, r});
    rec.component_count = 1;
    out.push_back(std::move(rec));
  }
  return out;
}

Extremal extremal_dims(FormKind kind, int n, int r) {
  Extremal ext;
  ext.max_dim = -1;
  for (int d = 1; d <= n / 2; ++d) {
    for (int l = 0; l <= d; ++l) {
      if (!stratum_nonempty(kind, n, d, l)) continue;
      long long dim = dim_stratum({kind, n, d, l, r});
      if (dim > ext.max_dim) {
        ext.max_dim = dim;
        ext.argmax.clear();
      }
      if (dim == ext.max_dim) ext.argmax.emplace_back(l, d);
    }
  }
  if (ext.max_dim < 0)
    fail(Errc::EmptyStratum, "no nonempty stratum for these parameters");
  ext.codim = static_cast<long long>(r) * n * n - ext.max_dim;
  std::sort(ext.argmax.begin(), ext.argmax.end());
  return ext;
}

LieCodim lie_codim_oracle(const BilinearSpace& space, const Subspace& w) {
  if (static_cast<int>(w.ambient_dim()) != space.dim() ||
      w.field() != space.field())
    fail(Errc::AmbientMismatch, "subspace does not live in this space");
  const FieldSpec& f = space.field();
  int n = space.dim();
  const Matrix& q = space.gram();
  // unknowns: X_{ab} at index a*n + b
  // g: (X^T Q + Q X)_{ij} = sum_a X_{ai} Q_{aj} + sum_b Q_{ib} X_{bj} = 0
  Matrix g_rows(f, n * n, n * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      int row = i * n + j;
      for (int a = 0; a < n; ++a) g_rows(row, a * n + i) += q(a, j);
      for (int b = 0; b < n; ++b) g_rows(row, b * n + j) += q(i, b);
    }
  }
  long long dim_g = n * n - static_cast<long long>(rref(g_rows).rank());

  // h: additionally X w in W for each basis vector w of W, expressed through
  // the annihilator rows of W
  Subspace ann = kernel(w.basis());
  Matrix h_extra(f, w.dim() * ann.dim(), n * n);
  std::size_t row = 0;
  for (std::size_t wi = 0; wi < w.dim(); ++wi) {
    Vec wv = w.basis().row(wi);
    for (std::size_t ai = 0; ai < ann.dim(); ++ai, ++row) {
      Vec av = ann.basis().row(ai);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) h_extra(row, i * n + j) = av[i] * wv[j];
    }
  }
  long long dim_h =
      n * n - static_cast<long long>(rref(g_rows.vstack(h_extra)).rank());
  return {dim_g, dim_h, dim_g - dim_h};
}

}  // namespace invgen
