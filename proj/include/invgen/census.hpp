#pragma once

#include <map>

#include "invgen/generation.hpp"

namespace invgen {

using Count = BigInt;

// Point count of Gr(l, d; V)(F_q) for every l, by direct enumeration.
std::map<int, Count> isotropy_counts(const BilinearSpace& space, int d,
                                     std::uint64_t cap = kDefaultSubspaceCap);

// |Gr(l,d)(F_q)| * q^{r((n-d)^2 + d^2 + l^2)}: the exact point count of the
// incidence variety of pairs (A_bullet, W).
Count incidence_count(const BilinearSpace& space, int d, int l, int r,
                      std::uint64_t cap = kDefaultSubspaceCap);

// Exact count of non-generating r-tuples over F_q by full enumeration.
Count exhaustive_nongenerating_count(const BilinearSpace& space, int r,
                                     std::uint64_t cap = kDefaultTupleCap);

struct MonteCarlo {
  long long generating = 0;
  long long samples = 0;
  double rate() const {
    return samples == 0 ? 0.0 : static_cast<double>(generating) / samples;
  }
};
MonteCarlo monte_carlo_rate(const BilinearSpace& space, int r, int samples,
                            std::uint64_t seed);

struct CountTable {
  FormKind kind = FormKind::Symmetric;
  int n = 0, r = 0, d = 0, l = 0;
  std::vector<std::pair<std::int64_t, Count>> counts;  // (q, count)
};

struct DegreeFit {
  int degree = 0;
  double residual = 0.0;  // rms of log-residuals
};
// Least-squares slope of log(count) against log(q), rounded to the nearest
// integer.  Needs at least three distinct q with positive counts.
DegreeFit degree_fit(const CountTable& table);

double log_count(const Count& c);  // natural log, safe for huge counts

}  // namespace invgen
