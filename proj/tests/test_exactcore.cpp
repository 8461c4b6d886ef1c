#include <doctest.h>

#include "invgen/linalg.hpp"
#include "invgen/rng.hpp"

using namespace invgen;

namespace {

Matrix random_invertible(Rng& rng, const FieldSpec& f, std::size_t n) {
  for (;;) {
    Matrix m = rng.uniform_matrix(f, n, n);
    if (Subspace::span(m).dim() == n) return m;
  }
}

}  // namespace

TEST_CASE("scalar arithmetic and parsing") {
  FieldSpec f5 = FieldSpec::prime(5);
  FieldSpec q = FieldSpec::rationals();

  CHECK(Scalar::of(f5, 7).residue() == 2);
  CHECK(Scalar::of(f5, -1).residue() == 4);
  CHECK((Scalar::of(f5, 2) * Scalar::of(f5, 3)).residue() == 1);
  CHECK(Scalar::of(f5, 2).inverse().residue() == 3);

  Scalar r = Scalar::parse(q, "-6/4");
  CHECK(r.str() == "-3/2");
  CHECK(Scalar::parse(q, "14").str() == "14");
  CHECK(Scalar::parse(f5, "17").residue() == 2);
  CHECK_THROWS_AS(Scalar::parse(f5, "1/2"), Error);
  CHECK_THROWS_AS(Scalar::parse(q, "x"), Error);

  CHECK_THROWS_AS(FieldSpec::prime(2), Error);
  CHECK_THROWS_AS(FieldSpec::prime(9), Error);

  // square roots
  CHECK(Scalar::of(f5, 4).sqrt().has_value());
  CHECK(!Scalar::of(FieldSpec::prime(3), 2).sqrt().has_value());
  CHECK(Scalar::parse(q, "9/4").sqrt()->str() == "3/2");
  CHECK(!Scalar::parse(q, "2").sqrt().has_value());
  auto s101 = Scalar::of(FieldSpec::prime(101), 100).sqrt();
  REQUIRE(s101.has_value());
  CHECK((*s101 * *s101).residue() == 100);
}

TEST_CASE("field axioms on random triples") {
  for (const FieldSpec& f :
       {FieldSpec::prime(101), FieldSpec::prime(3), FieldSpec::rationals()}) {
    Rng rng(7);
    for (int i = 0; i < 120; ++i) {
      Scalar a = rng.uniform_scalar(f), b = rng.uniform_scalar(f),
             c = rng.uniform_scalar(f);
      CHECK((a + b) + c == a + (b + c));
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      if (!a.is_zero()) CHECK((a * a.inverse()).is_one());
    }
  }
}

TEST_CASE("rref matches hand elimination") {
  FieldSpec f3 = FieldSpec::prime(3);
  auto rr = rref(Matrix::from_rows(f3, {{0, 1}, {0, 2}}));
  CHECK(rr.r == Matrix::from_rows(f3, {{0, 1}, {0, 0}}));
  CHECK(rr.rank() == 1);
  CHECK(rr.pivots == std::vector<std::size_t>{1});

  FieldSpec q = FieldSpec::rationals();
  auto rq = rref(Matrix::from_rows(q, {{2, 4}, {1, 2}}));
  CHECK(rq.r == Matrix::from_rows(q, {{1, 2}, {0, 0}}));
  CHECK(rq.rank() == 1);

  Matrix id = Matrix::identity(q, 4);
  auto ri = rref(id);
  CHECK(ri.r == id);
  CHECK(ri.rank() == 4);
  CHECK(ri.pivots == std::vector<std::size_t>{0, 1, 2, 3});
}

TEST_CASE("rref is a projection") {
  Rng rng(11);
  for (const FieldSpec& f : {FieldSpec::prime(7), FieldSpec::rationals()}) {
    for (int i = 0; i < 40; ++i) {
      Matrix m = rng.uniform_matrix(f, 3 + rng.below(3), 3 + rng.below(3));
      Matrix once = rref(m).r;
      CHECK(rref(once).r == once);
    }
  }
}

TEST_CASE("kernel examples and rank-nullity") {
  FieldSpec f5 = FieldSpec::prime(5);
  CHECK(kernel(Matrix::identity(f5, 3)).dim() == 0);
  CHECK(kernel(Matrix(f5, 3, 3)).dim() == 3);

  Subspace k = kernel(Matrix::from_rows(f5, {{1, 2}, {2, 4}}));
  CHECK(k == Subspace::span(Matrix::from_rows(f5, {{3, 1}})));

  Rng rng(13);
  for (const FieldSpec& f : {FieldSpec::prime(11), FieldSpec::rationals()}) {
    for (int i = 0; i < 60; ++i) {
      std::size_t rows = 1 + rng.below(5), cols = 1 + rng.below(5);
      Matrix m = rng.uniform_matrix(f, rows, cols);
      CHECK(Subspace::span(m).dim() + kernel(m).dim() == cols);
    }
  }
}

TEST_CASE("subspace canonical form is basis-independent") {
  Rng rng(17);
  for (const FieldSpec& f : {FieldSpec::prime(7), FieldSpec::rationals()}) {
    for (int i = 0; i < 40; ++i) {
      Matrix b = rng.uniform_matrix(f, 3, 5);
      Matrix t = random_invertible(rng, f, 3);
      CHECK(Subspace::span(t * b) == Subspace::span(b));
    }
  }
}

TEST_CASE("lattice sum and intersection") {
  FieldSpec f3 = FieldSpec::prime(3);
  Subspace e1 = Subspace::span(Matrix::from_rows(f3, {{1, 0, 0}}));
  Subspace e2 = Subspace::span(Matrix::from_rows(f3, {{0, 1, 0}}));
  auto le = lattice(e1, e2);
  CHECK(le.sum.dim() == 2);
  CHECK(le.intersection.dim() == 0);

  auto lw = lattice(e1, e1);
  CHECK(lw.sum == e1);
  CHECK(lw.intersection == e1);

  FieldSpec q = FieldSpec::rationals();
  Subspace plane = Subspace::span(Matrix::from_rows(q, {{1, 0}, {0, 1}}));
  Subspace diag = Subspace::span(Matrix::from_rows(q, {{1, 1}}));
  CHECK(lattice(plane, diag).intersection == diag);

  CHECK_THROWS_AS(lattice(e1, plane), Error);

  Rng rng(19);
  for (int i = 0; i < 60; ++i) {
    Subspace w1 = Subspace::span(rng.uniform_matrix(f3, 1 + rng.below(4), 4));
    Subspace w2 = Subspace::span(rng.uniform_matrix(f3, 1 + rng.below(4), 4));
    auto lr = lattice(w1, w2);
    CHECK(lr.sum.dim() + lr.intersection.dim() == w1.dim() + w2.dim());
  }
}

TEST_CASE("solve") {
  FieldSpec f5 = FieldSpec::prime(5);
  Vec b{Scalar::of(f5, 2), Scalar::of(f5, 4)};
  auto x = solve(Matrix::identity(f5, 2), b);
  REQUIRE(x.has_value());
  CHECK(*x == b);

  FieldSpec q = FieldSpec::rationals();
  auto none = solve(Matrix::from_rows(q, {{1, 1}, {1, 1}}),
                    Vec{Scalar::of(q, 0), Scalar::of(q, 1)});
  CHECK(!none.has_value());

  auto inv = solve(Matrix::from_rows(f5, {{2}}), Vec{Scalar::of(f5, 1)});
  REQUIRE(inv.has_value());
  CHECK((*inv)[0].residue() == 3);
}

TEST_CASE("subspace enumeration matches gaussian binomials") {
  FieldSpec f3 = FieldSpec::prime(3);
  std::size_t lines = 0;
  for_each_subspace(f3, 2, 1, [&](const Subspace&) { ++lines; },
                    kDefaultSubspaceCap);
  CHECK(lines == 4);

  std::vector<Subspace> planes;
  for_each_subspace(f3, 4, 2, [&](const Subspace& s) { planes.push_back(s); },
                    kDefaultSubspaceCap);
  CHECK(planes.size() == 130);
  CHECK(gaussian_binomial(BigInt(3), 4, 2) == 130);
  // enumeration yields canonical, pairwise distinct subspaces
  for (const auto& s : planes) CHECK(Subspace::span(s.basis()) == s);
  std::sort(planes.begin(), planes.end());
  CHECK(std::adjacent_find(planes.begin(), planes.end()) == planes.end());

  CHECK_THROWS_AS(
      for_each_subspace(FieldSpec::prime(101), 5, 2, [](const Subspace&) {}, 100),
      Error);
  CHECK_THROWS_AS(
      for_each_subspace(FieldSpec::rationals(), 3, 1, [](const Subspace&) {},
                        100),
      Error);
}

TEST_CASE("matrix inverse") {
  FieldSpec f7 = FieldSpec::prime(7);
  Rng rng(23);
  for (int i = 0; i < 20; ++i) {
    Matrix m = random_invertible(rng, f7, 4);
    CHECK(m * m.inverse() == Matrix::identity(f7, 4));
  }
  CHECK_THROWS_AS(Matrix(f7, 2, 2).inverse(), Error);
}
