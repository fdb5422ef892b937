#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "ainf/hochschild.hpp"

#include <chrono>
#include <random>

using namespace ainf;

namespace {

// Unnormalized complex Hom(A^{⊗n}, k) with the same sign convention plus the
// two outer terms ε(a_1)φ(..) and (-1)^{n+1}φ(..)ε(a_{n+1}).
std::vector<int> unnormalized_dims(const AugmentedAlgebra& A, int D) {
  const Field& F = A.field();
  const int n0 = A.dim();
  auto pw = [](int b, int e) {
    int r = 1;
    while (e-- > 0) r *= b;
    return r;
  };
  std::vector<Mat> d;
  for (int n = 0; n <= D; ++n) {
    Mat M = Mat::Zero(pw(n0, n + 1), pw(n0, n));
    for (int r = 0; r < M.rows(); ++r) {
      std::vector<int> w(n + 1);
      for (int k = n, x = r; k >= 0; --k, x /= n0) w[k] = x % n0;
      auto idx = [&](const std::vector<int>& u) {
        int x = 0;
        for (int c : u) x = x * n0 + c;
        return x;
      };
      if (w[0] == 0) M(r, idx({w.begin() + 1, w.end()})) += 1;
      if (w[n] == 0) M(r, idx({w.begin(), w.end() - 1})) += F.sign(n + 1);
      for (int i = 0; i < n; ++i) {
        const Vec& prod = A.prod(w[i], w[i + 1]);
        for (int z = 0; z < n0; ++z) {
          if (prod(z) == 0) continue;
          std::vector<int> u(w.begin(), w.begin() + i);
          u.push_back(z);
          u.insert(u.end(), w.begin() + i + 2, w.end());
          M(r, idx(u)) += F.sign(i + 1) * prod(z);
        }
      }
    }
    d.push_back(F.reduced(M));
  }
  std::vector<int> out;
  for (int n = 0; n <= D; ++n)
    out.push_back(pw(n0, n) - rank(F, d[n]) - (n > 0 ? rank(F, d[n - 1]) : 0));
  return out;
}

}  // namespace

TEST_CASE("F2[x]/(x^2): d vanishes, dims 1") {
  auto A = trunc_poly(2, 2);
  auto D = hochschild_dga(A, 4);
  for (int n = 0; n <= 4; ++n) {
    CHECK(D.dim(n) == 1);
    CHECK((D.complex().d(n).array() == 0).all());
  }
  auto E = ext_algebra(A, 4);
  CHECK(E.dims == std::vector<int>{1, 1, 1, 1, 1});
  for (int n = 0; n <= 4; ++n) CHECK((E.retract.h.at(n).array() == 0).all());
  // H ≅ F_2[y]: y^a y^b != 0 for a + b <= 4.
  Vec y = Vec::Ones(1);
  for (int a = 1; a <= 4; ++a)
    for (int b = 1; a + b <= 4; ++b) CHECK(E.product(a, y, b, y)(0) == 1);
}

TEST_CASE("trivial algebra") {
  auto A = trunc_poly(1, 3);
  auto E = ext_algebra(A, 3);
  CHECK(E.dims == std::vector<int>{1, 0, 0, 0});
  CHECK(E.dga.dim(2) == 0);
}

TEST_CASE("F2[x]/(x^3): H^1 = H^2 = 1 and α∪α is a coboundary") {
  auto A = trunc_poly(3, 2);
  auto E = ext_algebra(A, 4);
  CHECK(E.dims == std::vector<int>{1, 1, 1, 1, 1});
  Vec alpha = E.retract.i.at(1).col(0);
  Vec sq = E.dga.mul(1, alpha, 1, alpha);
  CHECK(solve(A.field(), E.dga.complex().d(1), sq).has_value());
  CHECK(E.product(1, Vec::Ones(1), 1, Vec::Ones(1)) == Vec::Zero(1));
  // Z^2 cut out by ψ(x², x²) = 0 and ψ(x, x²) = ψ(x², x); Ā basis (x, x²).
  Mat Z = kernel_basis(A.field(), E.dga.complex().d(2));
  CHECK(Z.cols() == 2);
  for (int k = 0; k < Z.cols(); ++k) {
    CHECK(Z(3, k) == 0);
    CHECK(Z(1, k) == Z(2, k));
  }
}

TEST_CASE("dga axioms across the catalog") {
  for (auto [name, p] : std::vector<std::pair<std::string, int>>{
           {"trunc_poly:3", 3}, {"cyclic:4", 2}, {"elem_abelian:2", 2}, {"cyclic:9", 3}, {"elem_abelian:2", 3}}) {
    auto A = catalog(name, p).algebra;
    for (bool reduced : {false, true}) {
      auto D = hochschild_dga(A, default_degree_cap(A), reduced);
      auto rep = check_dga(D);
      CHECK_MESSAGE(rep.ok(), name);
    }
  }
}

TEST_CASE("normalized vs unnormalized cohomology") {
  for (auto [name, p] : std::vector<std::pair<std::string, int>>{
           {"trunc_poly:2", 2}, {"trunc_poly:3", 2}, {"trunc_poly:3", 3}, {"cyclic:3", 3}, {"cyclic:2", 2}}) {
    auto A = catalog(name, p).algebra;
    for (int D = 1; D <= 3; ++D) {
      auto E = ext_algebra(A, D);
      CHECK_MESSAGE(E.dims == unnormalized_dims(A, D), name);
    }
  }
}

TEST_CASE("dim H^1 = dim Ā/Ā^2") {
  for (auto [name, p] : std::vector<std::pair<std::string, int>>{
           {"cyclic:4", 2}, {"elem_abelian:2", 2}, {"elem_abelian:3", 2}, {"cyclic:9", 3}, {"heisenberg", 3}}) {
    auto A = catalog(name, p).algebra;
    RowReducer sq(A.field(), A.dim());
    for (int i = 1; i < A.dim(); ++i)
      for (int j = 1; j < A.dim(); ++j) sq.insert(A.prod(i, j));
    auto dims = cohomology_dims(hochschild_dga(A, 1).complex());
    CHECK_MESSAGE(dims[1] == A.abar_dim() - sq.rank(), name);
  }
}

TEST_CASE("Leibniz on random cochains") {
  auto A = group_algebra(elementary_abelian_group(3, 2), 3);
  auto D = hochschild_dga(A, 3);
  const Field& F = D.field();
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<Int> c(0, 2);
  for (int trial = 0; trial < 20; ++trial) {
    Vec u(D.dim(1)), v(D.dim(2));
    for (auto& x : u) x = c(rng);
    for (auto& x : v) x = c(rng);
    Vec lhs = F.mul(D.complex().d(3), D.mul(1, u, 2, v));
    Vec rhs = F.reduced(D.mul(2, F.mul(D.complex().d(1), u), 2, v) - D.mul(1, u, 3, F.mul(D.complex().d(2), v)));
    CHECK(lhs == rhs);
  }
}

TEST_CASE("degree caps") {
  CHECK(default_degree_cap(group_algebra(cyclic_group(9), 3)) == 3);
  CHECK(default_degree_cap(group_algebra(elementary_abelian_group(3, 2), 3)) == 3);
  CHECK(default_degree_cap(group_algebra(heisenberg_group(3), 3)) == 2);
  CHECK(default_degree_cap(trunc_poly(3, 2)) == 4);
}

TEST_CASE("Heisenberg retract") {
  auto A = group_algebra(heisenberg_group(3), 3);
  auto t0 = std::chrono::steady_clock::now();
  auto D = hochschild_dga(A, 2, true);
  auto r = cohomology_with_retract(D.complex());
  auto t1 = std::chrono::steady_clock::now();
  MESSAGE("heisenberg retract ms: " << std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count());
  CHECK(r.hdims == std::vector<int>{2, 4});
  CHECK(check_retract(r).ok());
}
