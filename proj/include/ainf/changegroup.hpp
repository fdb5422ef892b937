#pragma once
// Change of group along a subgroup inclusion K ⊂ G: restriction of
// Hochschild cochains, the induced A_∞-morphism η: H(G) -> H(K), and the
// square
//
//     k[K] ----> k[G]
//      |ρ_K       |ρ_G
//    hull_K --> hull_G     (bottom map dual to η)
//
// which commutes up to conjugation by a unit of k[K].

#include "ainf/reconstruct.hpp"

#include <optional>

namespace ainf {

struct SubgroupInclusion {
  FiniteGroupData G, K;
  std::vector<int> embedding;  // K element -> G element
  Int p = 2;
  std::string label;
};

// Subgroup of G generated by `generators` (element indices of G).
SubgroupInclusion inclusion(const FiniteGroupData& G, const std::vector<int>& generators, Int p,
                            std::string label = "");
// Centre of G.
SubgroupInclusion center_inclusion(const FiniteGroupData& G, Int p, std::string label = "");
// "center", or a comma-separated list of element indices/names generating K.
SubgroupInclusion parse_inclusion(const std::string& catalog_name, const std::string& subgroup, Int p);

// k[K] -> k[G] in adapted coordinates.
Mat inclusion_matrix(const SubgroupInclusion& inc, const AugmentedAlgebra& kG, const AugmentedAlgebra& kK);

struct CochainRestriction {
  Mat J;                    // adapted inclusion k[K] -> k[G]
  std::vector<Mat> blocks;  // C^n(G) -> C^n(K), n = 1..D
  bool chain_map = false;
  bool multiplicative = false;
};

CochainRestriction restrict_cochains(const Mat& J, const DgAlgebra& CG, const DgAlgebra& CK);

AInfMorphism eta(const CochainRestriction& r, const MinimalModelStructure& mmG, const MinimalModelStructure& mmK);

// η_1 against Ext^1 = (Ā/Ā²)^* computed from the inclusion alone.
bool eta1_is_functorial(const AInfMorphism& eta, const Mat& J, const AugmentedAlgebra& kG, const AugmentedAlgebra& kK,
                        const MinimalModelStructure& mmG, const MinimalModelStructure& mmK);

struct FunctorialityReport {
  std::string label;
  Int p = 2;
  int weight = 0;
  int eta_weight = 0;
  ReconstructionReport G, K;
  CochainRestriction restriction;
  AInfMorphism eta;
  IdentityReport eta_morphism;
  bool eta1_functorial = false;
  bool relations_preserved = false;  // hull_K relations map into the ideal of hull_G
  AlgebraMap hull_map;               // hull_K -> hull_G, normal coordinates
  MapReport hull_map_report;
  Mat top, bottom;                   // ρ_G ∘ incl and hull_map ∘ ρ_K
  bool exact = false;
  std::optional<Vec> conjugator;     // in k[K], adapted coordinates, ε(u) = 1
  std::string conjugator_text;
  std::string diagnostic;
  bool ok() const;
};

// `eta_weight` bounds the morphism check on η (0: the arity cap).
FunctorialityReport diagram_check(const SubgroupInclusion& inc, std::uint64_t seedG = 0, std::uint64_t seedK = 1,
                                  Caps caps = {}, int eta_weight = 0);

}  // namespace ainf
