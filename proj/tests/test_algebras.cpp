#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "ainf/algebras.hpp"

using namespace ainf;

namespace {

Vec vec(std::initializer_list<Int> xs) {
  Vec v(static_cast<Eigen::Index>(xs.size()));
  int k = 0;
  for (Int x : xs) v(k++) = x;
  return v;
}

// k ⊕ strictly upper triangular 3x3 matrices: basis 1, E12, E23, E13.
AugmentedAlgebra upper_nil(const Field& F) {
  std::vector<Vec> t(16, Vec::Zero(4));
  for (int i = 0; i < 4; ++i) {
    t[0 * 4 + i] = Vec::Unit(4, i);
    t[i * 4 + 0] = Vec::Unit(4, i);
  }
  t[1 * 4 + 2] = Vec::Unit(4, 3);  // E12 E23 = E13
  return AugmentedAlgebra::from_table(F, {"1", "E12", "E23", "E13"}, Vec::Unit(4, 0), Vec::Unit(4, 0), t);
}

}  // namespace

TEST_CASE("trivial group gives the field") {
  auto A = group_algebra(cyclic_group(1), 5);
  CHECK(A.dim() == 1);
  CHECK(A.nilpotency_index() == 1);
}

TEST_CASE("C2 over F2: (g-1)^2 = 0") {
  auto A = group_algebra(cyclic_group(2), 2);
  CHECK(A.dim() == 2);
  CHECK(A.nilpotency_index() == 2);
  CHECK(A.names()[1] == "g-1");
  CHECK(A.prod(1, 1) == Vec::Zero(2));
  CHECK(A.commutative());
}

TEST_CASE("nilpotency indices") {
  CHECK(trunc_poly(2, 2).nilpotency_index() == 2);
  CHECK(trunc_poly(5, 3).nilpotency_index() == 5);
  CHECK(group_algebra(cyclic_group(9), 3).nilpotency_index() == 9);
  CHECK(group_algebra(cyclic_group(4), 2).nilpotency_index() == 4);
  // (C3)^2: (x, y) with x^3 = y^3 = 0, top monomial x^2 y^2.
  CHECK(group_algebra(elementary_abelian_group(3, 2), 3).nilpotency_index() == 5);
}

TEST_CASE("Heisenberg group of order 27") {
  auto G = heisenberg_group(3);
  CHECK(G.order() == 27);
  CHECK_FALSE(G.abelian());
  auto A = group_algebra(G, 3);
  CHECK(A.dim() == 27);
  CHECK_FALSE(A.commutative());
  CHECK(A.nilpotency_index() == 9);
}

TEST_CASE("group algebra commutative iff group abelian") {
  for (auto name : {"cyclic:4", "elem_abelian:2", "product:cyclic(2)*cyclic(4)"}) {
    auto e = catalog(name, 2);
    CHECK(e.group->abelian() == e.algebra.commutative());
  }
  auto e = catalog("heisenberg", 3);
  CHECK(e.group->abelian() == e.algebra.commutative());
}

TEST_CASE("catalog") {
  auto t = catalog("trunc_poly(2)", 2);
  CHECK(t.algebra.dim() == 2);
  CHECK(t.algebra.nilpotency_index() == 2);
  CHECK_FALSE(t.group.has_value());
  auto k = catalog("elem_abelian:2", 2);
  CHECK(k.group->order() == 4);
  CHECK(k.algebra.dim() == 4);
  CHECK(catalog("heisenberg", 3).group->order() == 27);
  CHECK(catalog("product:cyclic:3*cyclic:3", 3).algebra.dim() == 9);
  CHECK_THROWS_AS(catalog("nonsense", 2), InputError);
  CHECK_THROWS_AS(catalog("cyclic:6", 2), InputError);
  CHECK_THROWS_AS(catalog("cyclic:x", 2), InputError);
}

TEST_CASE("invalid inputs fail loudly") {
  // Not associative: 2-dim, x·x = 1 is not local and is caught.
  Field F(3);
  std::vector<Vec> t = {vec({1, 0}), vec({0, 1}), vec({0, 1}), vec({1, 0})};
  CHECK_THROWS_AS(AugmentedAlgebra::from_table(F, {"1", "x"}, vec({1, 0}), vec({1, 0}), t), InputError);
  // F_3 x F_3 (idempotent e) is augmented but not local.
  std::vector<Vec> u = {vec({1, 0}), vec({0, 1}), vec({0, 1}), vec({0, 1})};
  CHECK_THROWS_AS(AugmentedAlgebra::from_table(F, {"1", "e"}, vec({1, 0}), vec({1, 0}), u), InputError);
  CHECK_THROWS_AS(make_group({"a", "b"}, {{0, 0}, {0, 1}}), InputError);
}

TEST_CASE("input basis is converted to an adapted basis") {
  // F_2[x]/(x^2) presented on the basis {1, 1+x}, with ε(1+x) = 1.
  Field F(2);
  std::vector<Vec> t = {vec({1, 0}), vec({0, 1}), vec({0, 1}), vec({1, 0})};
  auto A = AugmentedAlgebra::from_table(F, {"1", "y"}, vec({1, 0}), vec({1, 1}), t);
  CHECK(A.names()[1] == "y-1");
  CHECK(A.prod(1, 1) == Vec::Zero(2));
  CHECK(A.to_input().col(1) == vec({1, 1}));
}

TEST_CASE("opposite") {
  Field F(3);
  auto H = group_algebra(heisenberg_group(3), 3);
  auto HH = opposite(opposite(H));
  for (int i = 0; i < H.dim(); ++i)
    for (int j = 0; j < H.dim(); ++j) REQUIRE(HH.prod(i, j) == H.prod(i, j));
  auto C = trunc_poly(3, 3);
  auto Cop = opposite(C);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) CHECK(Cop.prod(i, j) == C.prod(i, j));
  auto N = upper_nil(F);
  auto Nop = opposite(N);
  CHECK(Nop.prod(2, 1) == Vec::Unit(4, 3));
  CHECK(Nop.prod(1, 2) == Vec::Zero(4));
  CHECK(N.nilpotency_index() == 3);
}

TEST_CASE("word index") {
  WordIndex w(2, 3);
  CHECK(w.size() == 15);
  CHECK(w.index({}) == 0);
  CHECK(w.index({1}) == 2);
  CHECK(w.index({0, 1}) == 4);
  CHECK(w.word(w.index({1, 0, 1})) == std::vector<int>{1, 0, 1});
  CHECK(w.concat(w.index({1}), w.index({0, 1})) == w.index({1, 0, 1}));
  CHECK(w.concat(w.index({1, 1}), w.index({0, 1})) == -1);
  for (int k = 0; k < w.size(); ++k) CHECK(w.index(w.word(k)) == k);
}

TEST_CASE("truncated quotients") {
  Field F(2);
  {
    WordIndex w(1, 4);
    auto P = truncated_quotient(F, {"x"}, {Vec::Unit(w.size(), w.index({0, 0}))}, 4);
    CHECK(P.weight_dims() == std::vector<int>{1, 1, 0, 0, 0});
  }
  {
    Field F3(3);
    WordIndex w(2, 3);
    Vec r = Vec::Zero(w.size());
    r(w.index({0, 1})) = 1;
    r(w.index({1, 0})) = 2;
    auto P = truncated_quotient(F3, {"x", "y"}, {r}, 3);
    CHECK(P.weight_dims() == std::vector<int>{1, 2, 3, 4});
    CHECK(P.commutative());
  }
  {
    auto P = truncated_quotient(F, {"a", "b", "c"}, {}, 3);
    CHECK(P.weight_dims() == std::vector<int>{1, 3, 9, 27});
    CHECK_FALSE(P.commutative());
  }
  {
    // Inhomogeneous: x^2 + x^3 — the quotient is still F_2[x]/(x^2).
    WordIndex w(1, 4);
    Vec r = Vec::Zero(w.size());
    r(w.index({0, 0})) = 1;
    r(w.index({0, 0, 0})) = 1;
    auto P = truncated_quotient(F, {"x"}, {r}, 4);
    CHECK(P.weight_dims() == std::vector<int>{1, 1, 0, 0, 0});
    CHECK(P.reduce(r) == Vec::Zero(w.size()));
  }
  {
    // Adding relations never increases dims.
    Field F3(3);
    WordIndex w(2, 3);
    Vec r1 = Vec::Zero(w.size()), r2 = Vec::Zero(w.size());
    r1(w.index({0, 1})) = 1;
    r1(w.index({1, 0})) = 2;
    r2(w.index({0, 0})) = 1;
    r2(w.index({1, 1, 1})) = 1;
    auto P1 = truncated_quotient(F3, {"x", "y"}, {r1}, 3);
    auto P2 = truncated_quotient(F3, {"x", "y"}, {r1, r2}, 3);
    for (int k = 0; k <= 3; ++k) CHECK(P2.weight_dims()[k] <= P1.weight_dims()[k]);
    CHECK(P2.render(r2) == "x*x + y*y*y");
  }
}

TEST_CASE("algebra maps") {
  auto C2 = std::make_shared<const AugmentedAlgebra>(group_algebra(cyclic_group(2), 2));
  auto T2 = std::make_shared<const AugmentedAlgebra>(trunc_poly(2, 2));
  Field F(2);
  SUBCASE("identity") {
    auto r = verify_algebra_map({view(C2), view(C2), identity(2)});
    CHECK(r.isomorphism());
  }
  SUBCASE("g -> 1 + x") {
    // In input coordinates: e -> 1, g -> 1 + x.  Convert to adapted bases.
    Mat Min(2, 2);
    Min << 1, 1, 0, 1;
    Mat M = F.mul(inverse(F, T2->to_input()), F.mul(Min, C2->to_input()));
    auto r = verify_algebra_map({view(C2), view(T2), M});
    CHECK(r.isomorphism());
    // g -> x is not even unital-multiplicative.
    Mat Bad(2, 2);
    Bad << 1, 0, 0, 1;
    Bad = F.mul(inverse(F, T2->to_input()), F.mul(Bad, C2->to_input()));
    CHECK_FALSE(verify_algebra_map({view(C2), view(T2), Bad}).isomorphism());
  }
  SUBCASE("augmentation") {
    auto k = std::make_shared<const AugmentedAlgebra>(trunc_poly(1, 2));
    Mat eps(1, 2);
    eps << 1, 0;
    auto r = verify_algebra_map({view(C2), view(k), eps});
    CHECK(r.unit);
    CHECK(r.multiplicative);
    CHECK_FALSE(r.bijective);
  }
  SUBCASE("presented target") {
    WordIndex w(1, 2);
    auto P = std::make_shared<const PresentedAlgebra>(F, std::vector<std::string>{"x"},
                                                      std::vector<Vec>{Vec::Unit(w.size(), w.index({0, 0}))}, 2);
    CHECK(P->dim() == 2);
    auto r = verify_algebra_map({view(T2), view(P), identity(2)});
    CHECK(r.isomorphism());
  }
}
