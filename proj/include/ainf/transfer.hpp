#pragma once
// Homotopy transfer of a dg-algebra structure onto cohomology.
//
// With Θ_1 = i and Θ_n = -h Λ_n, Λ_n = Σ_{s+t=n} b_2(Θ_s ⊗ Θ_t):
//   b^H_n = p Λ_n,   f_n = Θ_n.
// The left inverse g comes from the tensor trick: on weight n,
//   g_n = (-1)^{n-1} p (δH)^{n-1} = -g_{n-1} ∘ δ ∘ H,
// where H = Σ_k 1^{k-1} ⊗ h ⊗ (ip)^{n-k} and δ = Σ_j 1^{j-1} ⊗ b_2 ⊗ 1^{n-j-1},
// both with Koszul signs in the shifted degrees.

#include "ainf/ainfty.hpp"

#include <mutex>

namespace ainf {

struct MinimalModelStructure {
  std::shared_ptr<const DgAlgebra> dga;
  std::shared_ptr<const HomotopyRetract> retract;
  AInfPtr source;  // from_dga(dga), truncated at the carried degrees
  AInfPtr model;   // (H, m), minimal
  AInfMorphism f;  // H -> source
  AInfMorphism g;  // source -> H
  int cap = 0;     // arity cap N
  std::shared_ptr<void> internals;  // memo tables shared with f, g and m

  const Field& field() const { return dga->field(); }
};

// Requires lo >= 1 and h^lo = 0 (true whenever the incoming differential
// vanishes, as for the reduced Hochschild complex).
MinimalModelStructure minimal_model(const DgAlgebra& D, const HomotopyRetract& r, int cap);
MinimalModelStructure minimal_model(const DgAlgebra& D, int cap, std::uint64_t seed = 0);

// Reduced Hochschild dga of A in degrees 1..D, its retract, and the transfer.
MinimalModelStructure transfer_algebra(const AugmentedAlgebra& A, int D, int cap, std::uint64_t seed = 0);

// The morphism identity for g, evaluated on dense functionals per degree
// pattern instead of per basis tuple.  Same report shape as check_morphism.
IdentityReport check_left_inverse(const MinimalModelStructure& mm, int N);

struct TransferReport {
  IdentityReport structure;  // m, up to N
  IdentityReport f_check;    // f, up to N
  IdentityReport g_check;    // g, up to N_g
  bool f1_is_i = false;
  bool g1_is_p = false;
  bool g_after_f_is_identity = false;  // up to N_g
  bool m2_is_cup = false;
  bool ok() const {
    return structure.ok() && f_check.ok() && g_check.ok() && f1_is_i && g1_is_p && g_after_f_is_identity &&
           m2_is_cup;
  }
};

TransferReport check_transfer(const MinimalModelStructure& mm, int N, int N_g);

// Nonzero m_n (n >= 2) on basis words of weight <= N, in the unshifted sign
// convention, keyed by word.
std::map<Word, Vec> nonzero_products(const AInfAlgebra& A, int N);

}  // namespace ainf
