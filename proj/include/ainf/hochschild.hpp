#pragma once
// dg-algebras and the normalized Hochschild cochain dg-algebra C•(A, k).

#include "ainf/algebras.hpp"
#include "ainf/graded.hpp"

#include <functional>
#include <map>
#include <memory>
#include <mutex>

namespace ainf {

// Structure constants of one product block C^a ⊗ C^b -> C^{a+b}: for the
// input pair x·dim(b) + y, the nonzero (z, coefficient) terms.
struct ProductBlock {
  int a = 0, b = 0;
  std::vector<std::vector<std::pair<int, Int>>> terms;
  bool kronecker = false;  // product is the identity C^a ⊗ C^b = C^{a+b}
};

// Carried degrees lo..hi of `complex`.  Products landing above hi are zero
// (we always work with the quotient by the dg-ideal of degrees > hi, which
// is valid since every carried degree is >= lo >= 0 and the d's raise degree).
class DgAlgebra {
 public:
  using Mul = std::function<Vec(int a, const Vec& u, int b, const Vec& v)>;

  DgAlgebra() = default;
  DgAlgebra(CochainComplex complex, Mul mul, bool kronecker = false);

  const Field& field() const { return C_.field(); }
  const CochainComplex& complex() const { return C_; }
  int lo() const { return C_.lo(); }
  int hi() const { return C_.hi(); }
  int dim(int n) const { return C_.dim(n); }
  // u ∈ C^a, v ∈ C^b; zero-length result when a + b > hi.
  Vec mul(int a, const Vec& u, int b, const Vec& v) const;
  const ProductBlock& block(int a, int b) const;
  std::string label;

 private:
  CochainComplex C_;
  Mul mul_;
  bool kronecker_ = false;
  mutable std::map<std::pair<int, int>, std::shared_ptr<ProductBlock>> blocks_;
  mutable std::shared_ptr<std::mutex> mu_ = std::make_shared<std::mutex>();
};

struct DgaReport {
  std::vector<CheckItem> items;  // "d∘d = 0", "associativity", "Leibniz" per degree tuple
  bool ok() const;
};

// Exhaustive check on basis elements; triples/pairs whose result would land
// above hi are skipped (they vanish in the quotient).
DgaReport check_dga(const DgAlgebra& D);

// Words over the Ā-basis, for cochain coordinates: the cochain dual to the
// word (w_1..w_n) has index Σ w_i·m^{n-i}, m = dim Ā.
struct HochschildComplex {
  std::shared_ptr<const AugmentedAlgebra> algebra;
  int degree_cap = 0;
  int m = 0;  // dim Ā
  std::vector<int> word(int n, int index) const;
  int index(const std::vector<int>& w) const;
};

// Normalized cochains.  `reduced = false`: degrees 0..D (C^0 = F_p, unit
// carried).  `reduced = true`: the augmentation ideal C^{≥1}, degrees 1..D,
// with incoming d_0 = 0 — the input for transfer.  C^{D+1} is carried as the
// target of d_D in both cases.
DgAlgebra hochschild_dga(const AugmentedAlgebra& A, int D, bool reduced = false);

// Default degree cap: ν + 1, but at least 2 and small enough that
// (dim Ā)^D <= 1024.
int default_degree_cap(const AugmentedAlgebra& A);

struct ExtAlgebra {
  DgAlgebra dga;             // full normalized complex, degrees 0..D
  HomotopyRetract retract;   // onto H^0..H^D
  std::vector<int> dims;     // dim H^n, n = 0..D
  // Induced product H^a ⊗ H^b -> H^{a+b}: p(i x ∪ i y).
  Vec product(int a, const Vec& x, int b, const Vec& y) const;
};

ExtAlgebra ext_algebra(const AugmentedAlgebra& A, int D, std::uint64_t seed = 0);

}  // namespace ainf
