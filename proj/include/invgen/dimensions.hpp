#pragma once

#include <string>
#include <vector>

#include "invgen/bilinear.hpp"

namespace invgen {

struct StratumKey {
  FormKind kind;
  int n, d, l, r;
};

// Implemented emptiness rule: 1 <= d <= n-1, 0 <= l <= min(d, n-d), and in
// the skew case n even with l = d (mod 2).
bool stratum_nonempty(FormKind kind, int n, int d, int l);

long long dim_grassmannian(FormKind kind, int n, int d, int l);
long long dim_zwr(int n, int d, int l, int r);
long long dim_stratum(const StratumKey& key);

struct CensusRecord {
  std::string label;  // "Z(d,d,r)" or "cl Z(0,d,r)"
  int d = 0;
  int l = 0;
  long long dim = 0;
  int component_count = 1;
};
std::vector<CensusRecord> component_census(FormKind kind, int n, int r);

struct Extremal {
  long long max_dim = 0;
  std::vector<std::pair<int, int>> argmax;  // (l, d) pairs, d <= n/2
  long long codim = 0;                      // r n^2 - max_dim
};
Extremal extremal_dims(FormKind kind, int n, int r);

// Independent check of the Grassmannian dimensions: solve the linear systems
// X^T Q + Q X = 0 and X W <= W explicitly and compare codimensions.
struct LieCodim {
  long long dim_g = 0;
  long long dim_h = 0;
  long long codim = 0;
};
LieCodim lie_codim_oracle(const BilinearSpace& space, const Subspace& w);

}  // namespace invgen
