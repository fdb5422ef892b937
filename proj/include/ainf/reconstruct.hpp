#pragma once
// Reconstruction of an augmented algebra from the A_∞-structure on its Ext
// algebra: A -> T̂(ΣH^1)* / (m*((ΣH^2)*)), x ↦ ε(x) + Σ_i (e ↦ f_i(e)(x)).

#include "ainf/barcobar.hpp"
#include "ainf/transfer.hpp"

namespace ainf {

struct Caps {
  int degree = 0;  // D; 0 means the default for the algebra
  int arity = 0;   // N; default max(ν, 4)
  int weight = 0;  // W; default ν
};
Caps resolve_caps(const AugmentedAlgebra& A, Caps c);

// Hex digest of the retract matrices (i, p, h).
std::string fingerprint(const HomotopyRetract& r);

// Columns: images of A's adapted basis in the hull's normal coordinates.
AlgebraMap rho_u(std::shared_ptr<const AugmentedAlgebra> A, const MinimalModelStructure& mm,
                 std::shared_ptr<const PresentedAlgebra> hull);

struct ReconstructionReport {
  std::string algebra;
  Int p = 2;
  std::uint64_t seed = 0;
  Caps caps;
  std::string retract_fingerprint;
  std::vector<int> ext_dims;   // H^1..H^D
  std::vector<int> hull_dims;  // per weight 0..W
  std::vector<std::string> relations;
  std::shared_ptr<const PresentedAlgebra> hull;
  AlgebraMap rho;
  std::shared_ptr<const MinimalModelStructure> model;
  MapReport verdict;
  bool transfer_ok = false;  // transfer gates at arity 4
  bool algebra_commutative = false;
  bool hull_commutative = false;
  std::string diagnostic;  // set when the weight cap had to be raised
  double seconds = 0;
  bool isomorphism() const { return verdict.isomorphism(); }
};

ReconstructionReport verify_reconstruction(std::shared_ptr<const AugmentedAlgebra> A, std::uint64_t seed = 0,
                                           Caps caps = {});

struct IndependenceReport {
  std::vector<ReconstructionReport> runs;
  bool all_isomorphic() const;
  // Pairs of runs whose retracts differ.
  int distinct_retracts() const;
};

IndependenceReport retract_independence(std::shared_ptr<const AugmentedAlgebra> A, const std::vector<std::uint64_t>& seeds,
                                        Caps caps = {});

struct ProbeReport {
  bool algebra_commutative = false;
  bool hull_commutative = false;
  // Smallest n >= 3 with m_n != 0 through the arity cap, or 0.
  int first_higher_product = 0;
  int arity_checked = 0;
  bool agree() const { return algebra_commutative == hull_commutative; }
};

ProbeReport commutativity_triviality_probe(std::shared_ptr<const AugmentedAlgebra> A, std::uint64_t seed = 0,
                                           Caps caps = {});

}  // namespace ainf
