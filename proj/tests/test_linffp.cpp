#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "ainf/linffp.hpp"

#include <random>

using namespace ainf;

namespace {

Mat mat(std::initializer_list<std::initializer_list<Int>> rows) {
  Mat M(rows.size(), rows.begin()->size());
  int i = 0;
  for (auto& r : rows) {
    int j = 0;
    for (Int x : r) M(i, j++) = x;
    ++i;
  }
  return M;
}

Mat random_matrix(std::mt19937_64& rng, const Field& F, int r, int c, int zero_bias) {
  Mat M(r, c);
  std::uniform_int_distribution<Int> d(0, F.p() - 1);
  std::uniform_int_distribution<int> z(0, 9);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j) M(i, j) = z(rng) < zero_bias ? 0 : d(rng);
  return M;
}

}  // namespace

TEST_CASE("field arithmetic") {
  Field F(7);
  CHECK(F.inv(3) == 5);
  CHECK(F.reduce(-1) == 6);
  CHECK(F.pow(3, 6) == 1);
  CHECK_THROWS_AS(Field(9), InputError);
  Scalar a(5, 7), b(4, 7);
  CHECK((a * b).residue == 6);
  CHECK((a * a.inverse()).residue == 1);
}

TEST_CASE("rref examples") {
  Field F2(2);
  auto r = rref(F2, identity(2));
  CHECK(r.R == identity(2));
  CHECK(r.rank == 2);
  CHECK(r.pivots == std::vector<int>{0, 1});

  auto z = rref(F2, Mat::Zero(3, 3));
  CHECK(z.rank == 0);
  CHECK(z.R == Mat::Zero(3, 3));

  // Hand reduction: R2 <- R2 + R1.
  auto h = rref(F2, mat({{1, 1, 0}, {1, 1, 1}}));
  CHECK(h.R == mat({{1, 1, 0}, {0, 0, 1}}));
  CHECK(h.rank == 2);
  // Row spaces agree: enumerate all 8 vectors of F_2^3.
  for (int v = 0; v < 8; ++v) {
    Vec x(3);
    x << (v & 1), (v >> 1) & 1, (v >> 2) & 1;
    bool in_orig = (v == 0) || v == 3 || v == 7 || v == 4;  // 0, (1,1,0), (1,1,1), (0,0,1)
    CHECK(in_span(F2, h.R.transpose(), x) == in_orig);
  }
}

TEST_CASE("kernel examples") {
  Field F2(2);
  CHECK(kernel_basis(F2, identity(3)).cols() == 0);
  CHECK(kernel_basis(F2, Mat::Zero(3, 3)).cols() == 3);
  Mat K = kernel_basis(F2, mat({{1, 1}}));
  REQUIRE(K.cols() == 1);
  CHECK(K.col(0) == Vec::Ones(2));
}

TEST_CASE("solve examples") {
  Field F3(3);
  Vec b(2);
  b << 2, 1;
  CHECK(*solve(F3, identity(2), b) == b);
  CHECK_FALSE(solve(F3, Mat::Zero(2, 2), b).has_value());
  auto x = solve(F3, mat({{1, 1}, {0, 1}}), b);
  REQUIRE(x.has_value());
  CHECK(*x == Vec::Ones(2));
  CHECK_THROWS_AS(solve(F3, identity(3), b), InputError);
}

TEST_CASE("complement examples") {
  Field F2(2);
  Mat W = identity(2);
  CHECK(column_space(F2, complement(F2, Mat(2, 0), W)) == W);
  CHECK(complement(F2, W, W).cols() == 0);
  Mat U = Mat::Ones(2, 1);
  Mat C = complement(F2, U, W);
  REQUIRE(C.cols() == 1);
  Vec e1(2);
  e1 << 0, 1;
  CHECK(C.col(0) == e1);
  CHECK_THROWS_AS(complement(F2, identity(2), Mat::Ones(2, 1)), InputError);
}

TEST_CASE("random properties") {
  std::mt19937_64 rng(12345);
  for (Int p : {2, 3, 5, 101}) {
    Field F(p);
    for (int trial = 0; trial < 40; ++trial) {
      int r = 1 + trial % 7, c = 1 + (trial * 3) % 8;
      Mat M = random_matrix(rng, F, r, c, trial % 8);
      auto R = rref(F, M);
      CHECK(rref(F, R.R).R == R.R);
      Mat K = kernel_basis(F, M);
      CHECK(R.rank + K.cols() == c);
      CHECK((F.mul(M, K).array() == 0).all());
      CHECK(rank(F, M) == R.rank);
      CHECK(rank(F, M.transpose()) == R.rank);
      // complement inside a random subspace, for several seeds
      Mat W = column_space(F, random_matrix(rng, F, c, 1 + trial % c, 0));
      Mat U = column_space(F, F.mul(W, random_matrix(rng, F, W.cols(), 1 + trial % 3, 3)));
      for (std::uint64_t seed : {0ull, 1ull, 77ull}) {
        Mat Cc = complement(F, U, W, seed);
        Mat UC(c, U.cols() + Cc.cols());
        UC << U, Cc;
        CHECK(U.cols() + Cc.cols() == W.cols());
        CHECK(rank(F, UC) == W.cols());
        for (int j = 0; j < Cc.cols(); ++j) CHECK(in_span(F, W, Vec(Cc.col(j))));
      }
      if (r == c && R.rank == r) CHECK(F.mul(M, inverse(F, M)) == identity(r));
    }
  }
}
