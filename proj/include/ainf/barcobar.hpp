#pragma once
// Dual bar construction and classical hull.
//
// The generator ξ_e dual to a basis element e of degree d sits in degree
// 1 - d, so ξ's from A^1 have degree 0 and those from A^2 degree -1; m* has
// degree +1.  Coefficients are paired without signs:
//   m*(ξ_e) = Σ_n Σ_w [b_n(w)]_e · ξ_w,
// and m* is extended to words by the Leibniz rule with the Koszul sign
// (-1)^{Σ_{j<i} |ξ_j|}.  With this pairing (m*)^2 = 0 on generators is
// term for term the Stasheff identity in the shifted convention.

#include "ainf/ainfty.hpp"

namespace ainf {

// Sparse element of the truncated tensor algebra on ΣA*.
using Tensor = std::map<Word, Int>;

class DualBar {
 public:
  DualBar(AInfPtr A, int W);

  const AInfAlgebra& algebra() const { return *A_; }
  AInfPtr algebra_ptr() const { return A_; }
  const Field& field() const { return A_->field(); }
  int weight_cap() const { return W_; }
  static int generator_degree(const Letter& e) { return 1 - e.deg; }

  // m*(ξ_e), truncated at weight W.
  const Tensor& differential(const Letter& e) const;
  // Leibniz extension to arbitrary tensors.
  Tensor apply(const Tensor& t) const;
  // (m*)^2 = 0 on every generator, per weight 1..W.
  IdentityReport check() const;

 private:
  AInfPtr A_;
  int W_;
  std::map<Letter, Tensor> diff_;
};

DualBar dual_bar(AInfPtr A, int W);

// Generators: (ΣA^1)*, named x1, x2, ...; relations: the degree-0 part of
// m*((ΣA^2)*), one per basis element of A^2.  Requires A minimal.
PresentedAlgebra classical_hull(const DualBar& B);

// Weight-2 components of the hull relations, as vectors over the g^2
// words x_a x_b (index a·g + b).
std::vector<Vec> quadratic_relations(const DualBar& B);

// Whether the weight-2 relation span is the image of 1 - τ on V ⊗ V
// (τ the flip), V = (ΣA^1)*.  Throws InputError unless m_2 on A^1 is
// exterior: m_2(x, x) = 0 and m_2(x, y) = -m_2(y, x).
bool quadratic_part_is_alternating(const DualBar& B);

}  // namespace ainf
