#pragma once

#include <cstdint>

#include "invgen/matrix.hpp"

namespace invgen {

// Counter-based deterministic generator (splitmix64).  Streams are keyed by
// (seed, index) so sharded consumers reproduce the same values regardless of
// shard boundaries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed * 0x9E3779B97F4A7C15ULL + 1) {}

  static Rng keyed(std::uint64_t seed, std::uint64_t index) {
    Rng r(seed);
    r.state_ ^= 0xBF58476D1CE4E5B9ULL * (index + 1);
    r.next();
    return r;
  }

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // next() mod bound; the modulo bias is irrelevant at the moduli used here
  // and keeps the stream layout independent of the bound.
  std::uint64_t below(std::uint64_t bound) { return next() % bound; }

  Scalar uniform_scalar(const FieldSpec& f) {
    if (f.is_prime_field())
      return Scalar::from_residue(f, static_cast<std::int64_t>(below(f.p)));
    // small integers are generic enough for the rejection-sampling uses
    return Scalar::of(f, static_cast<std::int64_t>(below(33)) - 16);
  }

  Vec uniform_vec(const FieldSpec& f, std::size_t n) {
    Vec v;
    v.reserve(n);
    for (std::size_t i = 0; i < n; ++i) v.push_back(uniform_scalar(f));
    return v;
  }

  Matrix uniform_matrix(const FieldSpec& f, std::size_t rows, std::size_t cols) {
    Matrix m(f, rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = uniform_scalar(f);
    return m;
  }

 private:
  std::uint64_t state_;
};

}  // namespace invgen
