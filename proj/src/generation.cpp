#include "invgen/generation.hpp"

#include <algorithm>

namespace invgen {

GeneratorTuple::GeneratorTuple(BilinearSpace s, std::vector<Matrix> m)
    : space(std::move(s)), mats(std::move(m)) {
  for (const auto& a : mats) {
    if (!a.is_square() || static_cast<int>(a.rows()) != space.dim() ||
        a.field() != space.field())
      fail(Errc::AmbientMismatch,
           "tuple entries must be n x n over the space's field");
  }
}

ClosureReport involution_closure(const GeneratorTuple& t) {
  const FieldSpec& f = t.space.field();
  std::size_t n = t.space.dim();
  std::size_t nn = n * n;

  std::vector<Matrix> gens;
  for (const auto& a : t.mats) {
    gens.push_back(a);
    gens.push_back(t.space.adjoint(a));
  }

  std::vector<Vec> seed;
  seed.push_back(Matrix::identity(f, n).flatten());
  for (const auto& g : gens) seed.push_back(g.flatten());
  Subspace span = Subspace::span_rows(f, nn, seed);

  for (;;) {
    std::vector<Vec> rows;
    for (std::size_t i = 0; i < span.dim(); ++i) rows.push_back(span.basis().row(i));
    std::size_t base = rows.size();
    for (const auto& g : gens) {
      for (std::size_t i = 0; i < base; ++i) {
        Matrix b = Matrix::unflatten(f, n, n, rows[i]);
        rows.push_back((g * b).flatten());
      }
    }
    Subspace next = Subspace::span_rows(f, nn, rows);
    if (next.dim() == span.dim()) break;
    span = std::move(next);
  }

  ClosureReport rep;
  rep.dim = static_cast<int>(span.dim());
  rep.generates = rep.dim == static_cast<int>(nn);
  rep.basis = std::move(span);
  return rep;
}

bool generates(const GeneratorTuple& t) { return involution_closure(t).generates; }

namespace {

bool maps_into(const Subspace& w, const Matrix& a, const Subspace& target) {
  for (std::size_t i = 0; i < w.dim(); ++i) {
    Vec img = apply(a, w.basis().row(i));
    if (!target.contains(img)) return false;
  }
  return true;
}

}  // namespace

bool is_rho_invariant(const GeneratorTuple& t, const Subspace& w) {
  if (static_cast<int>(w.ambient_dim()) != t.space.dim() ||
      w.field() != t.space.field())
    fail(Errc::AmbientMismatch, "subspace does not live in this space");
  Subspace wp = perp(t.space, w);
  for (const auto& a : t.mats) {
    if (!maps_into(w, a, w)) return false;
    if (!maps_into(wp, a, wp)) return false;
  }
  return true;
}

InvariantProfile invariant_profile(const GeneratorTuple& t, int d_max,
                                   std::uint64_t cap) {
  if (!t.space.field().is_prime_field())
    fail(Errc::FieldNotFinite, "invariant_profile enumerates over F_q only");
  int n = t.space.dim();
  InvariantProfile out;
  int top = std::min(d_max, n / 2);
  for (int d = 1; d <= top; ++d) {
    for_each_subspace(
        t.space.field(), n, d,
        [&](const Subspace& w) {
          if (!is_rho_invariant(t, w)) return;
          int l = iso_radical(t.space, w).rank;
          out[{d, l}].push_back(w);
        },
        cap);
  }
  for (auto& [key, list] : out) std::sort(list.begin(), list.end());
  return out;
}

std::vector<Subspace> all_rho_invariant_subspaces(const GeneratorTuple& t,
                                                  std::uint64_t cap) {
  int n = t.space.dim();
  InvariantProfile prof = invariant_profile(t, n / 2, cap);
  std::vector<Subspace> all;
  all.push_back(Subspace::zero(t.space.field(), n));
  all.push_back(Subspace::full(t.space.field(), n));
  for (const auto& [key, list] : prof) {
    for (const auto& w : list) {
      all.push_back(w);
      all.push_back(perp(t.space, w));
    }
  }
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());
  return all;
}

}  // namespace invgen
