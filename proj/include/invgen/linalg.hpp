#pragma once

#include <compare>
#include <functional>
#include <optional>
#include <vector>

#include "invgen/matrix.hpp"

namespace invgen {

struct RrefResult {
  Matrix r;
  std::vector<std::size_t> pivots;  // pivot column per nonzero row
  std::size_t rank() const { return pivots.size(); }
};

// Deterministic reduced row echelon form: leftmost pivot column, topmost
// nonzero row, leading entries normalized to 1, pivot columns cleared.
RrefResult rref(const Matrix& m);

// Subspace of k^n stored as its canonical RREF basis (rows = basis vectors,
// no zero rows).  Two subspaces are equal iff their bases are entry-wise
// equal.
class Subspace {
 public:
  Subspace() = default;
  static Subspace span(const Matrix& rows);
  static Subspace span_rows(const FieldSpec& f, std::size_t n,
                            const std::vector<Vec>& rows);
  static Subspace zero(const FieldSpec& f, std::size_t n);
  static Subspace full(const FieldSpec& f, std::size_t n);
  // rows already in canonical RREF with no zero rows (enumeration fast path)
  static Subspace trusted_rref(Matrix rows,
                               std::vector<std::size_t> pivots);

  std::size_t ambient_dim() const { return basis_.cols(); }
  std::size_t dim() const { return basis_.rows(); }
  const Matrix& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  const FieldSpec& field() const { return basis_.field(); }

  bool contains(const Vec& v) const;
  bool contains(const Subspace& other) const;
  bool operator==(const Subspace& o) const;
  bool operator!=(const Subspace& o) const { return !(*this == o); }
  std::strong_ordering operator<=>(const Subspace& o) const;

 private:
  Matrix basis_;                      // dim x n, RREF
  std::vector<std::size_t> pivots_;   // pivot column of each basis row
};

// Right kernel {x : m x = 0}, canonical.
Subspace kernel(const Matrix& m);

// Some x with m x = b, free variables set to zero; nullopt if inconsistent.
std::optional<Vec> solve(const Matrix& m, const Vec& b);

struct LatticeResult {
  Subspace sum;
  Subspace intersection;
};
LatticeResult lattice(const Subspace& w1, const Subspace& w2);

// {A w : w in W} where A acts on column vectors.
Subspace image(const Subspace& w, const Matrix& a);

// Rows of `outer`'s basis that extend `inner` to a basis of inner + outer,
// scanned in order (deterministic complement choice).
Matrix completion_rows(const Subspace& inner, const Subspace& outer);

// ---- subspace enumeration over prime fields -------------------------------

BigInt gaussian_binomial(const BigInt& q, int n, int d);
BigInt subspace_count(const FieldSpec& f, int n, int d);

// Visits every d-dimensional subspace of F_q^n exactly once, by RREF pivot
// pattern, in a fixed deterministic order.  Throws FieldNotFinite for the
// rationals and EnumerationTooLarge if the count exceeds `cap`.
void for_each_subspace(const FieldSpec& f, int n, int d,
                       const std::function<void(const Subspace&)>& fn,
                       std::uint64_t cap);

inline constexpr std::uint64_t kDefaultSubspaceCap = 10'000'000;
inline constexpr std::uint64_t kDefaultTupleCap = 100'000'000;

}  // namespace invgen
