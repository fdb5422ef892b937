#pragma once
// The second model: E = End_A(P) for the normalized bar resolution
// P_{-i} = A ⊗ Ā^{⊗i}, truncated at a depth L, with Ψ: C -> E and Φ: E -> C.
//
// A degree-n element is a family of module maps P_{-i} -> P_{-(i-n)},
// n <= i <= L, each stored by its values on 1[w] for words w of length i:
//   F(1[w]) = Σ_{a,u} F[w, a, u] e_a[u].
// Product = composition, d = [∂, -].
//
//   Ψ(φ)(a_0[a_1|..|a_i]) = σ_n (-1)^{n(i-n)} a_0[a_1|..|a_{i-n}] φ(a_{i-n+1}, .., a_i)
//   Φ(F)(a_1, .., a_n)    = σ_n ε(F(1[a_1|..|a_n])),     σ_n = (-1)^{n(n+1)/2}
// (signs fixed against dφ = Σ (-1)^i φ(.., a_i a_{i+1}, ..) and dF = ∂F - (-1)^n F∂).
//
// Capping the last arguments makes Ψ multiplicative for composition.
//
// Transfer needs a model in degrees >= 1.  E^0 -> E^1 is not zero, so we use
// the dg-subalgebra E' = K ⊕ E^{>=2}, where K ⊂ E^1 is a complement of
// d(E^0) containing Ψ(C^1).  H(E') = H^{>=1}(E) below the depth, and Ψ
// lands in E'.

#include "ainf/reconstruct.hpp"

namespace ainf {

class EndDga {
 public:
  // Throws InputError when some E^n, n >= 1, would exceed `max_dim`.  E^0
  // is never stored; only its columns under d are generated.
  EndDga(std::shared_ptr<const AugmentedAlgebra> A, int depth, int max_dim = kMaxDim);
  static constexpr int kMaxDim = 12000;

  const AugmentedAlgebra& algebra() const { return *A_; }
  const Field& field() const { return A_->field(); }
  int depth() const { return L_; }
  // Full component E^n, 0 <= n <= depth.
  int full_dim(int n) const { return dim_[n]; }
  int index(int n, int i, int w, int a, int u) const;

  // Composition F∘G, F of degree a, G of degree b.
  Vec compose(int a, const Vec& F, int b, const Vec& G) const;
  // [∂, F] for F of degree n.
  Vec d(int n, const Vec& F) const;
  Mat d_matrix(int n) const;
  // The resolution differential as an element of E^1.
  const Vec& resolution_differential() const { return del_; }
  Vec identity() const;  // unit, degree 0

  // Ψ: C^n -> E^n and Φ: E^n -> C^n on full coordinates.
  Mat psi_matrix(int n) const;
  Mat phi_matrix(int n) const;

 private:
  std::shared_ptr<const AugmentedAlgebra> A_;
  int L_, m_, nA_;
  std::vector<int> dim_;
  std::vector<std::vector<int>> off_;  // off_[n][i - n]
  std::vector<int> pow_;
  Vec del_;
};

// E' in degrees 1..hi (hi + 1 carried as the target of d), with Ψ, Φ
// restricted to it.
struct EndModel {
  std::shared_ptr<const EndDga> E;
  SpMat K;  // basis of E'^1 in full coordinates; first columns Ψ(C^1)
  DgAlgebra dga;
  DgAlgebra cochains;  // reduced Hochschild C^{1..hi}
  std::vector<Mat> psi, phi;  // degrees 1..hi+1, in E' coordinates
  int hi = 0;
  const Mat& psi_at(int n) const { return psi[n - 1]; }
  const Mat& phi_at(int n) const { return phi[n - 1]; }
};

// K is found without forming d: E^0 -> E^1.  The length-L part of E^0 hits
// ⊕_w im ∂_L exactly; the rest is projected onto a complement of that.
EndModel end_model(std::shared_ptr<const AugmentedAlgebra> A, int depth, int hi, int max_dim = EndDga::kMaxDim);

struct SegalReport {
  bool psi_chain = false;
  bool psi_multiplicative = false;
  bool phi_chain = false;
  bool phi_psi_identity = false;
  bool h_psi_bijective = false;
  bool ok() const { return psi_chain && psi_multiplicative && phi_chain && phi_psi_identity && h_psi_bijective; }
};

SegalReport check_segal(const EndModel& M);

// Retract on E' adapted to Ψ: harmonic part Ψ(H̃_C), complements containing
// Ψ(B_C) and Ψ(L_C), where the C-side pieces come from `rc`.
HomotopyRetract adapted_retract(const EndModel& M, const HomotopyRetract& rc);

struct CompatibleRetract {
  HomotopyRetract retract;  // (i', p', h') on C
  RetractReport identities;
  bool square_i = false, square_p = false, square_h = false;
  bool ok() const { return identities.ok() && square_i && square_p && square_h; }
};

// i' = Φ i H(Ψ), p' = H(Φ) p Ψ, h' = Φ h ΣΨ, with H(Ψ) given per degree
// (H' coordinates -> H coordinates).
CompatibleRetract compatible_retract(const EndModel& M, const HomotopyRetract& rE, const std::vector<Mat>& hpsi);

struct TwoModelReport {
  std::string algebra;
  int depth = 0, hi = 0;
  std::vector<int> e_dims;       // dim E'^n, n = 1..hi
  std::vector<int> h_c, h_e;     // cohomology dims through depth - 1
  SegalReport segal;
  bool compatible = false;
  std::vector<Mat> h_psi;        // H(Ψ) per degree
  IdentityReport m_c, m_e;       // validity of m' and m^E
  IdentityReport psi_morphism, upsilon_morphism;
  bool upsilon1_is_h_psi = false;
  bool upsilon_iso = false;
  std::vector<int> hull_c, hull_e;
  std::map<Word, Vec> products_c, products_e;  // nonzero m_n, n >= 3
  bool ok() const;
};

TwoModelReport upsilon(std::shared_ptr<const AugmentedAlgebra> A, int depth = 4, std::uint64_t seed = 0, int N = 4,
                       int max_dim = EndDga::kMaxDim);

}  // namespace ainf
