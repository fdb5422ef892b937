#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "ainf/fuzz.hpp"
#include "ainf/transfer.hpp"

using namespace ainf;

namespace {

bool zero(const Vec& v) { return v.size() == 0 || (v.array() == 0).all(); }

// m_k(α, .., α) on the degree-1 generator.
Vec power_product(const AInfAlgebra& H, int k) {
  Vec a = Vec::Unit(H.dim(1), 0);
  std::vector<int> degs(k, 1);
  Args args(k, &a);
  return H.m(degs, args);
}

}  // namespace

TEST_CASE("F_2[x]/(x^2): trivial higher structure, strict f") {
  auto mm = transfer_algebra(trunc_poly(2, 2), 5, 5);
  CHECK(is_trivial(*mm.model, 5));
  for (int k = 2; k <= 5; ++k) {
    std::vector<int> degs(k, 1);
    std::vector<int> idx(k, 0);
    if (k >= 2) CHECK(zero(mm.f.f_basis(degs, idx)));
    CHECK(zero(mm.g.f_basis(degs, idx)));
  }
  // H ≅ F_2[y]: y^a · y^b != 0.
  Vec y = Vec::Ones(1);
  CHECK(mm.model->m({1, 1}, {&y, &y}) == Vec::Ones(1));
  CHECK(mm.model->m({2, 3}, {&y, &y}) == Vec::Ones(1));
  CHECK(check_transfer(mm, 5, 5).ok());
}

TEST_CASE("F_2[x]/(x^3): m_3 agrees with the tree evaluation") {
  auto mm = transfer_algebra(trunc_poly(3, 2), 4, 4);
  const auto& D = *mm.dga;
  const auto& r = *mm.retract;
  const Field& F = D.field();
  REQUIRE(r.hdims[0] == 1);
  REQUIRE(r.hdims[1] == 1);
  Vec ia = r.i.at(1).col(0);
  // p(μ(hμ(iα, iα), iα) + μ(iα, hμ(iα, iα))), signs immaterial in char 2.
  Vec t = F.mul(r.h.at(2), D.mul(1, ia, 1, ia));
  Vec expect = F.reduced(F.mul(r.p.at(2), Vec(D.mul(1, t, 1, ia) + D.mul(1, ia, 1, t))));
  CHECK(!zero(expect));
  CHECK(power_product(*mm.model, 3) == expect);
  CHECK(zero(power_product(*mm.model, 2)));
}

TEST_CASE("first nonzero power of the generator is m_n on F_p[x]/(x^n)") {
  for (Int p : {2, 3})
    for (int n : {2, 3, 4}) {
      auto A = trunc_poly(n, p);
      auto mm = transfer_algebra(A, default_degree_cap(A), 4);
      const auto& H = *mm.model;
      CHECK(H.dim(1) == 1);
      CHECK(H.dim(2) == 1);
      for (int k = 3; k < n; ++k) CHECK_MESSAGE(zero(power_product(H, k)), "p=" << p << " n=" << n << " k=" << k);
      Vec top = power_product(H, n);
      CHECK_MESSAGE(!zero(top), "p=" << p << " n=" << n);
    }
}

TEST_CASE("transfer gates on the catalog") {
  for (auto [name, p] : std::vector<std::pair<std::string, Int>>{{"trunc_poly:3", 3},
                                                                  {"trunc_poly:4", 2},
                                                                  {"cyclic:4", 2},
                                                                  {"elem_abelian:2", 2},
                                                                  {"cyclic:3", 3},
                                                                  {"cyclic:9", 3}}) {
    auto A = catalog(name, p).algebra;
    const int nu = A.nilpotency_index();
    auto mm = transfer_algebra(A, default_degree_cap(A), std::max(nu, 4));
    auto rep = check_transfer(mm, 4, 4);
    CHECK_MESSAGE(rep.ok(), name << " p=" << p);
    CHECK(check_structure(*mm.model, std::max(nu, 4)).ok());
    CHECK(rep.structure.checked() > 0);
    CHECK(rep.g_check.checked() > 0);
  }
}

TEST_CASE("dense left-inverse check agrees with the generic morphism check") {
  auto mm = transfer_algebra(trunc_poly(3, 3), 4, 4);
  auto dense = check_left_inverse(mm, 4);
  auto generic = check_morphism(mm.g, 4);
  CHECK(dense.ok());
  CHECK(generic.ok());
  CHECK(dense.checked() == generic.checked());
  for (std::size_t w = 0; w < dense.weights.size(); ++w) CHECK(dense.weights[w].checked == generic.weights[w].checked);
}

TEST_CASE("differently seeded retracts give A_inf-isomorphic models") {
  auto A = catalog("cyclic:4", 2).algebra;
  const int D = default_degree_cap(A);
  auto mm0 = transfer_algebra(A, D, 4, 0);
  auto mm1 = transfer_algebra(A, D, 4, 17);
  bool differ = false;
  for (int n = mm0.retract->lo(); n <= mm0.retract->hi(); ++n) differ = differ || !(mm0.retract->i.at(n) == mm1.retract->i.at(n));
  CHECK(differ);
  auto phi = compose(mm1.g, mm0.f);
  CHECK(check_morphism(phi, 4).ok());
  CHECK(is_isomorphism(phi));
  CHECK(check_structure(*mm1.model, 4).ok());
}

TEST_CASE("opposite of a transferred model is valid") {
  auto A = catalog("trunc_poly:4", 3).algebra;
  auto mm = transfer_algebra(A, default_degree_cap(A), 4);
  auto op = opposite(*mm.model);
  CHECK(check_structure(op, 4).ok());
}

TEST_CASE("random dg-algebras pass every gate") {
  auto rep = fuzz(7, 20, 4);
  CHECK(rep.violations() == 0);
  for (auto& c : rep.cases) {
    int total = 0;
    for (int d : c.dims) total += d;
    CHECK(total <= 6);
    CHECK(c.dims.size() <= 3);
  }
  // Same seed, same cases.
  auto again = fuzz(7, 20, 4);
  for (std::size_t k = 0; k < rep.cases.size(); ++k) {
    CHECK(again.cases[k].seed == rep.cases[k].seed);
    CHECK(again.cases[k].hdims == rep.cases[k].hdims);
  }
}
