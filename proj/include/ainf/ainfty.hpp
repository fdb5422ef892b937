#pragma once
// A_∞-algebras and morphisms over F_p.
//
// Everything is stored in the shifted ("bar") convention: b_n has degree +1
// on (sA)^{⊗n}, and relates to m_n by
//   b_n(x_1, .., x_n) = (-1)^{Σ_i (n-i)(|x_i|-1)} m_n(x_1, .., x_n).
// So b_1 = d and b_2(x, y) = (-1)^{|x|-1} xy.  The dual bar criterion (m*)^2 = 0
// is checked on the predual side, where it reads
//   Σ_{r+s+t=n} b_{r+1+t}(1^r ⊗ b_s ⊗ 1^t) = 0
// with the Koszul sign (-1)^{Σ_{i<=r}(|x_i|-1)}.  Morphisms have shifted
// degree 0, so Σ f(1^r ⊗ b_s ⊗ 1^t) = Σ b_q(f_{i_1} ⊗ .. ⊗ f_{i_q}).
//
// Degrees run over lo..hi with lo >= 1.  Anything landing above hi is zero:
// the part of degree > hi is an A_∞-ideal, and we always work in the quotient.

#include "ainf/hochschild.hpp"

#include <functional>
#include <map>
#include <memory>
#include <string>
#include <vector>

namespace ainf {

struct GradedDims {
  int lo = 1, hi = 0;
  std::vector<int> dims;  // degrees lo..hi

  int dim(int n) const { return (n < lo || n > hi) ? 0 : dims[n - lo]; }
  int total() const;
  int offset(int n) const;  // position of degree n in the concatenated basis
  bool operator==(const GradedDims&) const = default;
};

// A homogeneous argument: degree plus coordinates in that degree.
using Args = std::vector<const Vec*>;
// (degrees, args) -> output.  Output is an empty Vec when its degree is not
// carried (outside lo..hi), which callers treat as zero.
using Multilinear = std::function<Vec(const std::vector<int>& degs, const Args& args)>;

// Expands a multilinear map given on basis words over the nonzero
// coordinates of the arguments.  `on_word(degs, idx)` returns the value on
// basis vectors (or empty for zero).
Vec expand_multilinear(const Field& F, int out_dim, const std::vector<int>& degs, const Args& args,
                       const std::function<Vec(const std::vector<int>&, const std::vector<int>&)>& on_word);

class AInfAlgebra {
 public:
  AInfAlgebra() = default;
  AInfAlgebra(Field F, GradedDims space, int cap, Multilinear b, std::vector<bool> vanishes);

  const Field& field() const { return F_; }
  const GradedDims& space() const { return space_; }
  int lo() const { return space_.lo; }
  int hi() const { return space_.hi; }
  int dim(int n) const { return space_.dim(n); }
  int cap() const { return cap_; }
  // Known to vanish identically (also true above the cap).
  bool vanishes(int n) const { return n > cap_ || (n < static_cast<int>(vanishes_.size()) && vanishes_[n]); }
  bool minimal() const { return vanishes(1); }

  // b_n on homogeneous arguments; empty when the output degree is not carried.
  Vec b(const std::vector<int>& degs, const Args& args) const;
  // b_n on basis vectors.
  Vec b_basis(const std::vector<int>& degs, const std::vector<int>& idx) const;
  // m_n = sign · b_n, the unshifted operation.
  Vec m(const std::vector<int>& degs, const Args& args) const;

  std::string label;

 private:
  Field F_;
  GradedDims space_;
  int cap_ = 0;
  Multilinear b_;
  std::vector<bool> vanishes_;
};

using AInfPtr = std::shared_ptr<const AInfAlgebra>;

// Sign relating m_n and b_n on arguments of the given degrees.
int bar_sign_parity(const std::vector<int>& degs);

class AInfMorphism {
 public:
  AInfMorphism() = default;
  AInfMorphism(AInfPtr source, AInfPtr target, int cap, Multilinear f, std::vector<bool> vanishes);

  const AInfAlgebra& source() const { return *src_; }
  const AInfAlgebra& target() const { return *tgt_; }
  AInfPtr source_ptr() const { return src_; }
  AInfPtr target_ptr() const { return tgt_; }
  int cap() const { return cap_; }
  bool vanishes(int n) const { return n > cap_ || (n < static_cast<int>(vanishes_.size()) && vanishes_[n]); }

  // f_n, output degree Σ|x_i| + 1 - n in the target.
  Vec f(const std::vector<int>& degs, const Args& args) const;
  Vec f_basis(const std::vector<int>& degs, const std::vector<int>& idx) const;
  // Matrix of f_1 in degree n.
  Mat linear(int n) const;

  std::string label;

 private:
  AInfPtr src_, tgt_;
  int cap_ = 0;
  Multilinear f_;
  std::vector<bool> vanishes_;
};

// Per-weight outcome of an identity check.  `checked` counts basis words
// whose identity lands in a carried degree; weights where every term is
// known to vanish are marked vacuous.
struct WeightCheck {
  int weight = 0;
  long long checked = 0;
  long long failures = 0;
  bool vacuous = false;
};

struct IdentityReport {
  std::vector<WeightCheck> weights;
  std::string first_failure;
  bool ok() const;
  long long checked() const;
  // First failing weight, or 0.
  int failing_weight() const;
};

// Dual bar validity up to weight N (default: the algebra's cap).
IdentityReport check_structure(const AInfAlgebra& A, int N = 0);
IdentityReport check_morphism(const AInfMorphism& f, int N = 0);

// (g∘f)_n = Σ g_q(f_{i_1} ⊗ .. ⊗ f_{i_q}).
AInfMorphism compose(const AInfMorphism& g, const AInfMorphism& f);
AInfMorphism identity_morphism(AInfPtr A);
// f_1 given per degree lo..hi (square or not), f_n = 0 for n >= 2.
AInfMorphism strict_morphism(AInfPtr source, AInfPtr target, const std::vector<Mat>& f1);

// f_1 = id and f_n = 0 for 2 <= n <= N on all basis words (carried outputs).
bool is_identity(const AInfMorphism& f, int N = 0);
// f_1 bijective in every degree.
bool is_isomorphism(const AInfMorphism& f);
// Minimal and b_n = 0 for 3 <= n <= N.
bool is_trivial(const AInfAlgebra& A, int N = 0);

AInfAlgebra from_dga(const DgAlgebra& D, int cap);

enum class OppositeSign {
  // (-1)^{Σ_{i<j}|a_i||a_j| + (n-1)(n-2)/2}: the reversal b ↦ b∘τ composed
  // with x ↦ -x on the suspension, which is always an A_∞-structure.
  Corrected,
  // Koszul reversal sign alone.
  KoszulOnly,
};
AInfAlgebra opposite(const AInfAlgebra& A, OppositeSign convention = OppositeSign::Corrected);

// Tabulated structure: values of b_n on basis words (letters are
// (degree, index) pairs); missing words are zero.
struct Letter {
  int deg, idx;
  auto operator<=>(const Letter&) const = default;
};
using Word = std::vector<Letter>;
AInfAlgebra tabulated(Field F, GradedDims space, int cap, std::map<Word, Vec> b);
// Same, but given by m_n values (signs converted).
AInfAlgebra tabulated_m(Field F, GradedDims space, int cap, const std::map<Word, Vec>& m);

// Exterior algebra Λ(x_1..x_d), generators in degree 1, degrees 1..cap
// (the augmentation ideal), m_2 = wedge, m_n = 0 otherwise.  Basis of degree
// k: k-subsets in lexicographic order.
AInfAlgebra exterior_algebra(int d, Int p, int degree_cap);
// binom(d, k) for k = 0..degree_cap.
std::vector<int> exterior_dims(int d, int degree_cap);

// Transport of structure along strict isomorphisms φ_n : A^n -> A'^n.
AInfAlgebra transport(const AInfAlgebra& A, const std::vector<Mat>& phi);

// All words of length n (as degree patterns) whose degree sum lies in [lo, hi].
std::vector<std::vector<int>> degree_patterns(const GradedDims& g, int n, int sum_lo, int sum_hi);

}  // namespace ainf
