#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "ainf/barcobar.hpp"
#include "ainf/transfer.hpp"

#include <random>

using namespace ainf;

namespace {

bool is_zero_vec(const Vec& v) { return (v.array() == 0).all(); }

AInfPtr share(AInfAlgebra A) { return std::make_shared<const AInfAlgebra>(std::move(A)); }

AInfPtr ext_model(const std::string& name, Int p) {
  auto A = catalog(name, p).algebra;
  auto mm = transfer_algebra(A, default_degree_cap(A), std::max(A.nilpotency_index(), 4));
  return mm.model;
}

long long binom(int n, int k) {
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// Keep only m_n on (degree 1)^n -> degree 2.
AInfAlgebra hull_part(const AInfAlgebra& A, int N) {
  std::map<Word, Vec> m;
  for (auto& [w, v] : nonzero_products(A, N)) {
    bool keep = true;
    for (auto& l : w) keep = keep && l.deg == 1;
    if (keep) m[w] = v;
  }
  return tabulated_m(A.field(), A.space(), N, m);
}

}  // namespace

TEST_CASE("dual bar of F_2[y]") {
  auto H = ext_model("trunc_poly:2", 2);
  auto B = dual_bar(H, 3);
  // m*(ξ_{y^2}) = ξ ⊗ ξ.
  const Tensor& t = B.differential({2, 0});
  CHECK(t.size() == 1);
  CHECK(t.at(Word{{1, 0}, {1, 0}}) == 1);
  CHECK(B.differential({1, 0}).empty());
  CHECK(B.check().ok());
  CHECK(DualBar::generator_degree({1, 0}) == 0);
  CHECK(DualBar::generator_degree({2, 0}) == -1);
}

TEST_CASE("(m*)^2 = 0 on transferred models and fails on a broken one") {
  for (auto [name, p] : std::vector<std::pair<std::string, Int>>{
           {"trunc_poly:3", 2}, {"trunc_poly:4", 3}, {"elem_abelian:2", 2}, {"heisenberg", 3}}) {
    auto H = ext_model(name, p);
    auto rep = dual_bar(H, 4).check();
    CHECK_MESSAGE(rep.ok(), name);
    CHECK(rep.checked() > 0);
  }
  // Non-associative m_2 on F_2[y]: m_2(y, y^2) = 0 but m_2(y^2, y) != 0.
  std::map<Word, Vec> m;
  for (int a = 1; a <= 3; ++a)
    for (int b = 1; a + b <= 3; ++b)
      if (!(a == 1 && b == 2)) m[{{a, 0}, {b, 0}}] = Vec::Ones(1);
  auto bad = dual_bar(share(tabulated_m(Field(2), {1, 3, {1, 1, 1}}, 2, m)), 3).check();
  CHECK(!bad.ok());
  CHECK(bad.failing_weight() == 3);
}

TEST_CASE("dual bar check agrees with the Stasheff check") {
  // Every weight where one fails, the other fails.
  Field F(3);
  GradedDims g{1, 3, {1, 2, 1}};
  Letter x{1, 0}, y{2, 0}, w{2, 1}, z{3, 0};
  for (Int c = 0; c < 3; ++c) {
    std::map<Word, Vec> m;
    m[{x, x, x}] = Vec::Unit(2, 0);
    m[{y, x, x}] = Vec::Ones(1);
    m[{x, x, x, x}] = Vec::Unit(2, 1);
    m[{w, x}] = Vec::Constant(1, c);
    auto A = share(tabulated_m(F, g, 4, m));
    auto s = check_structure(*A, 5);
    auto d = dual_bar(A, 5).check();
    CHECK(s.ok() == d.ok());
    CHECK(s.failing_weight() == d.failing_weight());
  }
}

TEST_CASE("classical hulls of truncated polynomial algebras") {
  SUBCASE("F_2[x]/(x^2)") {
    auto hull = classical_hull(dual_bar(ext_model("trunc_poly:2", 2), 2));
    CHECK(hull.generators() == 1);
    CHECK(hull.relations().size() >= 1);
    CHECK(hull.weight_dims() == std::vector<int>{1, 1, 0});
    CHECK(hull.render(hull.relations()[0]) == "x1*x1");
  }
  SUBCASE("F_2[x]/(x^3): the relation is the cube") {
    auto H = ext_model("trunc_poly:3", 2);
    auto B = dual_bar(H, 3);
    auto hull = classical_hull(B);
    CHECK(hull.weight_dims() == std::vector<int>{1, 1, 1, 0});
    CHECK(hull.render(hull.relations()[0]) == "x1*x1*x1");
    CHECK(is_zero_vec(quadratic_relations(B)[0]));
  }
  SUBCASE("F_3[x]/(x^4)") {
    auto hull = classical_hull(dual_bar(ext_model("trunc_poly:4", 3), 4));
    CHECK(hull.weight_dims() == std::vector<int>{1, 1, 1, 1, 0});
  }
}

TEST_CASE("exterior algebras give commutative power series") {
  for (Int p : {2, 3})
    for (int d = 1; d <= 3; ++d) {
      auto E = share(exterior_algebra(d, p, 2));
      auto B = dual_bar(E, 4);
      auto hull = classical_hull(B);
      auto dims = hull.weight_dims();
      for (int w = 0; w <= 4; ++w) CHECK_MESSAGE(dims[w] == binom(d + w - 1, w), "p=" << p << " d=" << d << " w=" << w);
      CHECK(quadratic_part_is_alternating(B));
      CHECK(hull.commutative());
    }
  // F_2[y] is not exterior.
  CHECK_THROWS_AS(quadratic_part_is_alternating(dual_bar(ext_model("trunc_poly:2", 2), 2)), InputError);
}

TEST_CASE("the hull sees only m_n from degree 1 to degree 2") {
  for (auto [name, p] : std::vector<std::pair<std::string, Int>>{{"trunc_poly:3", 3}, {"cyclic:4", 2}, {"elem_abelian:2", 3}}) {
    auto H = ext_model(name, p);
    const int W = catalog(name, p).algebra.nilpotency_index();
    auto full = classical_hull(dual_bar(H, W));
    auto part = classical_hull(dual_bar(share(hull_part(*H, W)), W));
    CHECK_MESSAGE(full.weight_dims() == part.weight_dims(), name);
    CHECK(full.relations().size() == part.relations().size());
    for (std::size_t k = 0; k < full.relations().size(); ++k) CHECK(full.relations()[k] == part.relations()[k]);
  }
}

TEST_CASE("strictly isomorphic models give hulls of equal dimensions") {
  auto H = ext_model("elem_abelian:2", 3);
  Field F(3);
  std::mt19937_64 rng(11);
  std::vector<Mat> phi;
  for (int n = H->lo(); n <= H->hi(); ++n) {
    for (;;) {
      Mat M(H->dim(n), H->dim(n));
      for (auto& x : M.reshaped()) x = static_cast<Int>(rng() % 3);
      if (rank(F, M) == H->dim(n)) {
        phi.push_back(M);
        break;
      }
    }
  }
  auto T = share(transport(*H, phi));
  auto a = classical_hull(dual_bar(H, 3)), b = classical_hull(dual_bar(T, 3));
  CHECK(a.weight_dims() == b.weight_dims());
  CHECK(a.weight_dims() == std::vector<int>{1, 2, 3, 2});
}
