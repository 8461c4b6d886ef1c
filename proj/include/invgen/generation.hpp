#pragma once

#include <map>

#include "invgen/bilinear.hpp"

namespace invgen {

// r-tuple of endomorphisms of a bilinear space.
struct GeneratorTuple {
  BilinearSpace space;
  std::vector<Matrix> mats;

  GeneratorTuple(BilinearSpace s, std::vector<Matrix> m);
  int r() const { return static_cast<int>(mats.size()); }
};

struct ClosureReport {
  int dim = 0;
  Subspace basis;  // subspace of the n^2-dimensional matrix space, canonical
  bool generates = false;
};

// Smallest subspace of End(V) containing I, every A_i and rho(A_i), and
// closed under multiplication.  Span closure: left-multiply the current
// basis by the generators until the rank stabilizes.
ClosureReport involution_closure(const GeneratorTuple& t);

bool generates(const GeneratorTuple& t);

// A_i W <= W and A_i W^perp <= W^perp for every i (the perp form of the
// rho-invariance condition).
bool is_rho_invariant(const GeneratorTuple& t, const Subspace& w);

struct ProfileKey {
  int d;
  int l;
  auto operator<=>(const ProfileKey&) const = default;
};
using InvariantProfile = std::map<ProfileKey, std::vector<Subspace>>;

// Brute-force enumeration of all rho-invariant subspaces of dimension
// d <= min(d_max, n/2) over a prime field; duality W <-> W^perp covers the
// other dimensions.
InvariantProfile invariant_profile(const GeneratorTuple& t, int d_max,
                                   std::uint64_t cap = kDefaultSubspaceCap);

// All rho-invariant subspaces including 0, V and the perps of the profile
// entries, deduplicated and sorted.
std::vector<Subspace> all_rho_invariant_subspaces(
    const GeneratorTuple& t, std::uint64_t cap = kDefaultSubspaceCap);

}  // namespace invgen
