#pragma once

#include <array>

#include "invgen/generation.hpp"
#include "invgen/poly.hpp"
#include "invgen/rng.hpp"

namespace invgen {

// Ordered basis of V staged as B0 | B1 | B2 | B3 where B0 spans Iso(W),
// B0 u B1 spans W and B0 u B2 spans W^perp.
struct GoodBasis {
  OrderedBasis basis;
  std::array<int, 4> stage_sizes{0, 0, 0, 0};

  int stage_offset(int s) const {
    int off = 0;
    for (int i = 0; i < s; ++i) off += stage_sizes[i];
    return off;
  }
};

// All 2^n sums of eigenspaces of a matrix with n distinct eigenvalues in its
// field (including 0 and V).  Throws EigenvaluesNotDistinctOrNotRational.
std::vector<Subspace> eig_invariant_subspaces(const Matrix& a);

// True iff the staged structure matches W and every subordinate subspace U
// whose perp is also subordinate lies in {0, Iso(W), W, W^perp, W+W^perp, V}.
bool is_good_basis(const BilinearSpace& space, const GoodBasis& gb,
                   const Subspace& w);

// Rejection-sampling construction of a good basis, staged W -> W+W^perp -> V.
// Throws FieldTooSmall when the retry budget is exhausted (over small fields
// the required generic sets can be empty).
GoodBasis good_basis(const BilinearSpace& space, const Subspace& w,
                     std::uint64_t seed);

// The six subspaces {0, Iso(W), W, W^perp, W+W^perp, V}, deduplicated, sorted.
std::vector<Subspace> six_set(const BilinearSpace& space, const Subspace& w);

// (A_1, 0, ..., 0) in Z(W, r; V) whose rho-invariant subspaces are exactly
// six_set(space, w).  A_1 is diagonal with distinct eigenvalues in a good
// basis; for the skew strata where no good basis exists over any field the
// construction falls back to irreducible companion blocks (verified before
// returning).
GeneratorTuple witness_tuple(const BilinearSpace& space, const Subspace& w,
                             int r, std::uint64_t seed);

// Uniform sample of Z(W, r; V) through the block form of the decomposition
// basis; every returned tuple has W as a rho-invariant subspace.
GeneratorTuple sample_zwr(const BilinearSpace& space, const Subspace& w,
                          int r, std::uint64_t seed);

inline long long zwr_free_entries(int n, int d, int l) {
  return static_cast<long long>(n - d) * (n - d) +
         static_cast<long long>(d) * d + static_cast<long long>(l) * l;
}

}  // namespace invgen
