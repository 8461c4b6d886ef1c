#pragma once

#include "invgen/linalg.hpp"

namespace invgen {

enum class FormKind { Symmetric, Skew };

inline const char* form_name(FormKind k) {
  return k == FormKind::Symmetric ? "symmetric" : "skew";
}

// V = k^n with a nondegenerate (skew-)symmetric form <v,w> = v Q w^T.
// Subspace bases are rows; an operator A acts on row vectors as v -> v A^T.
class BilinearSpace {
 public:
  BilinearSpace(FormKind kind, Matrix gram);
  static BilinearSpace standard(const FieldSpec& f, FormKind kind, int n);
  static Matrix standard_skew_gram(const FieldSpec& f, int n);  // Omega_n

  int dim() const { return static_cast<int>(gram_.rows()); }
  FormKind kind() const { return kind_; }
  const Matrix& gram() const { return gram_; }
  const Matrix& gram_inverse() const { return gram_inv_; }
  const FieldSpec& field() const { return gram_.field(); }

  Scalar inner(const Vec& v, const Vec& w) const;
  Matrix adjoint(const Matrix& a) const;  // rho(A) = Q^{-1} A^T Q

  bool operator==(const BilinearSpace& o) const {
    return kind_ == o.kind_ && gram_ == o.gram_;
  }

 private:
  FormKind kind_;
  Matrix gram_;
  Matrix gram_inv_;
};

Subspace perp(const BilinearSpace& space, const Subspace& w);

struct IsoRadical {
  Subspace radical;  // W n W^perp
  int rank;          // isotropy rank l
};
IsoRadical iso_radical(const BilinearSpace& space, const Subspace& w);

struct SubspaceProfile {
  int d;
  int l;
};
SubspaceProfile profile_of(const BilinearSpace& space, const Subspace& w);

// Totally isotropic C perfectly paired with W: rows of the result pair with
// the rows of `iso_rows` so that <iso_i, c_j> = delta_ij, <c_i, c_j> = 0,
// and every c is orthogonal to the rows of `ortho_rows`.
Matrix hyperbolic_complement_rows(const BilinearSpace& space,
                                  const Matrix& iso_rows,
                                  const Matrix& ortho_rows);
Subspace hyperbolic_complement(const BilinearSpace& space, const Subspace& w);

struct Decomposition {
  Subspace iso, wa, wb, c;
};
// Ordered bases of the four blocks; c rows pair with iso rows.
struct DecompositionBasis {
  Matrix iso, wa, wb, c;
};
Decomposition decompose(const BilinearSpace& space, const Subspace& w);
DecompositionBasis decompose_basis(const BilinearSpace& space,
                                   const Subspace& w);

struct OrderedBasis {
  Matrix rows;  // invertible, rows are the basis vectors
  Matrix gram_in_basis(const BilinearSpace& space) const;  // B Q B^T
};

enum class BasisLayout { Blocked, Interleaved };

struct NiceBasis {
  OrderedBasis basis;
  Matrix target_gram;  // what B Q B^T was reduced to
  int d = 0, l = 0;
  bool weak = false;              // diagonal middle block instead of identity
  std::vector<int> w_row_indices; // rows of `basis` spanning W
};
// Standard-form basis for the pair (V, W).  Strict mode normalizes the
// anisotropic middle block to the identity (symmetric case) and throws
// NonSquareScalar when the required square roots do not exist in the field;
// weak mode keeps a diagonal middle block instead.  Interleaved layout is
// the skew-only variant with Gram [[0, -I],[I, 0]].
NiceBasis nice_basis(const BilinearSpace& space, const Subspace& w,
                     BasisLayout layout, bool weak = false);

// g in the isometry group with g U = W and g U^perp = W^perp.
Matrix transporter(const BilinearSpace& space, const Subspace& u,
                   const Subspace& w);
Subspace transport(const Matrix& g, const Subspace& u);  // {g u : u in U}

// A space together with a subspace of prescribed dimension and isotropy
// rank, built over any field from the standard-form Gram (no square roots
// needed).  Used by the CLI witness command and the oracles.
struct ProfiledSpace {
  BilinearSpace space;
  Subspace w;
};
ProfiledSpace standard_profile(const FieldSpec& f, FormKind kind, int n,
                               int d, int l);

}  // namespace invgen
