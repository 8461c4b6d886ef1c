#include "invgen/census.hpp"

#include <algorithm>
#include <cmath>

#include "invgen/rng.hpp"

namespace invgen {

std::map<int, Count> isotropy_counts(const BilinearSpace& space, int d,
                                     std::uint64_t cap) {
  if (!space.field().is_prime_field())
    fail(Errc::FieldNotFinite, "isotropy counts enumerate over F_q only");
  std::map<int, Count> out;
  for_each_subspace(
      space.field(), space.dim(), d,
      [&](const Subspace& w) { ++out[iso_radical(space, w).rank]; }, cap);
  return out;
}

Count incidence_count(const BilinearSpace& space, int d, int l, int r,
                      std::uint64_t cap) {
  std::map<int, Count> grass = isotropy_counts(space, d, cap);
  auto it = grass.find(l);
  Count points = it == grass.end() ? Count(0) : it->second;
  if (points == 0) return 0;
  Count fibre = boost::multiprecision::pow(
      Count(space.field().p),
      static_cast<unsigned>(r * ((space.dim() - d) * (space.dim() - d) +
                                 d * d + l * l)));
  return points * fibre;
}

Count exhaustive_nongenerating_count(const BilinearSpace& space, int r,
                                     std::uint64_t cap) {
  const FieldSpec& f = space.field();
  if (!f.is_prime_field())
    fail(Errc::FieldNotFinite, "exhaustive counts enumerate over F_q only");
  int n = space.dim();
  Count total = boost::multiprecision::pow(Count(f.p),
                                           static_cast<unsigned>(r * n * n));
  if (total > Count(cap))
    fail(Errc::EnumerationTooLarge,
         "would enumerate " + total.str() + " tuples (cap " +
             std::to_string(cap) + ")");
  std::uint64_t count = total.convert_to<std::uint64_t>();
  std::int64_t p = f.p;
  Count bad = 0;
  std::vector<Matrix> mats(static_cast<std::size_t>(r), Matrix(f, n, n));
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    std::uint64_t code = idx;
    for (int k = 0; k < r; ++k)
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          mats[k](i, j) =
              Scalar::from_residue(f, static_cast<std::int64_t>(code % p));
          code /= p;
        }
    if (!generates(GeneratorTuple(space, mats))) ++bad;
  }
  return bad;
}

MonteCarlo monte_carlo_rate(const BilinearSpace& space, int r, int samples,
                            std::uint64_t seed) {
  const FieldSpec& f = space.field();
  if (!f.is_prime_field())
    fail(Errc::FieldNotFinite, "sampling is over F_q only");
  int n = space.dim();
  MonteCarlo mc;
  mc.samples = samples;
  for (int i = 0; i < samples; ++i) {
    Rng rng = Rng::keyed(seed, static_cast<std::uint64_t>(i));
    std::vector<Matrix> mats;
    for (int k = 0; k < r; ++k) mats.push_back(rng.uniform_matrix(f, n, n));
    if (generates(GeneratorTuple(space, std::move(mats)))) ++mc.generating;
  }
  return mc;
}

double log_count(const Count& c) {
  if (c <= 0) fail(Errc::InvalidInput, "log of nonpositive count");
  // split off the top bits so huge counts stay in double range
  unsigned bits = boost::multiprecision::msb(c) + 1;
  if (bits <= 52) return std::log(c.convert_to<double>());
  Count top = c >> (bits - 52);
  return std::log(top.convert_to<double>()) + (bits - 52) * std::log(2.0);
}

DegreeFit degree_fit(const CountTable& table) {
  std::vector<std::pair<double, double>> pts;  // (ln q, ln count)
  bool any_positive = false;
  std::vector<std::int64_t> seen;
  for (const auto& [q, count] : table.counts) {
    if (count < 0) fail(Errc::InvalidInput, "negative count");
    if (count == 0) continue;
    any_positive = true;
    if (std::find(seen.begin(), seen.end(), q) != seen.end()) continue;
    seen.push_back(q);
    pts.emplace_back(std::log(static_cast<double>(q)), log_count(count));
  }
  if (!any_positive) fail(Errc::AllZeroCounts, "every count is zero");
  if (pts.size() < 3)
    fail(Errc::InsufficientData,
         "need at least 3 distinct q with positive counts, have " +
             std::to_string(pts.size()));
  double sx = 0, sy = 0;
  for (auto& [x, y] : pts) {
    sx += x;
    sy += y;
  }
  double mx = sx / pts.size(), my = sy / pts.size();
  double num = 0, den = 0;
  for (auto& [x, y] : pts) {
    num += (x - mx) * (y - my);
    den += (x - mx) * (x - mx);
  }
  double slope = num / den;
  double intercept = my - slope * mx;
  double ss = 0;
  for (auto& [x, y] : pts) {
    double e = y - (slope * x + intercept);
    ss += e * e;
  }
  DegreeFit fit;
  fit.degree = static_cast<int>(std::llround(slope));
  fit.residual = std::sqrt(ss / pts.size());
  return fit;
}

}  // namespace invgen
