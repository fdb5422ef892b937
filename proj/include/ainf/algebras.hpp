#pragma once
// Finite-dimensional augmented local algebras, finite p-groups, presented
// (tensor algebra quotient) algebras and algebra maps.

#include "ainf/linffp.hpp"

#include <functional>
#include <memory>
#include <string>
#include <vector>

namespace ainf {

struct FiniteGroupData {
  std::vector<std::string> elements;
  std::vector<std::vector<int>> mult;  // mult[a][b] = index of a·b
  int identity = 0;

  int order() const { return static_cast<int>(elements.size()); }
  bool abelian() const;
  int inverse(int a) const;
};

// Checks closure, associativity, identity and inverses.
FiniteGroupData make_group(std::vector<std::string> elements, std::vector<std::vector<int>> mult);

FiniteGroupData cyclic_group(int n);
FiniteGroupData elementary_abelian_group(int p, int d);
// Upper unitriangular 3x3 matrices over F_p: (a,b,c)(a',b',c') = (a+a', b+b', c+c'+ab').
FiniteGroupData heisenberg_group(int p);
FiniteGroupData direct_product(const FiniteGroupData& G, const FiniteGroupData& H);
// Subgroup on the listed elements of G (closure checked), plus its embedding.
std::pair<FiniteGroupData, std::vector<int>> subgroup(const FiniteGroupData& G, const std::vector<int>& members);

// Internal form: basis element 0 is the unit, elements 1..dim-1 span the
// augmentation ideal Ā, so ε is the 0-th coordinate.
class AugmentedAlgebra {
 public:
  AugmentedAlgebra() = default;
  // `table[i * n + j]` = product of input basis vectors i and j, in input
  // coordinates.  unit/aug are given in input coordinates too.  Converts to
  // the adapted basis and validates associativity, unit, ε and nilpotency.
  static AugmentedAlgebra from_table(const Field& F, std::vector<std::string> names, const Vec& unit,
                                     const Vec& aug, const std::vector<Vec>& table);

  const Field& field() const { return F_; }
  int dim() const { return n_; }
  int abar_dim() const { return n_ - 1; }
  int nilpotency_index() const { return nu_; }
  const std::vector<std::string>& names() const { return names_; }
  // Product of adapted basis elements i and j.
  const Vec& prod(int i, int j) const { return table_[i * n_ + j]; }
  Vec multiply(const Vec& a, const Vec& b) const;
  Vec unit() const;
  bool commutative() const;
  // Columns: adapted basis in the input coordinates (identity for built-ins).
  const Mat& to_input() const { return to_input_; }
  const std::vector<std::string>& input_names() const { return input_names_; }
  std::string label;

 private:
  Field F_;
  int n_ = 0;
  int nu_ = 0;
  std::vector<std::string> names_, input_names_;
  std::vector<Vec> table_;
  Mat to_input_;
};

// |G| must be a power of p.  Adapted basis {1} ∪ {g - 1 : g != e}.
AugmentedAlgebra group_algebra(const FiniteGroupData& G, Int p);
AugmentedAlgebra trunc_poly(int n, Int p);
AugmentedAlgebra opposite(const AugmentedAlgebra& A);

struct CatalogEntry {
  std::string name;
  std::optional<FiniteGroupData> group;
  AugmentedAlgebra algebra;
};

// Names: cyclic:N, elem_abelian:D, heisenberg, trunc_poly:N,
// product:G1*G2*... (parenthesised forms like cyclic(4) also accepted).
CatalogEntry catalog(const std::string& name, Int p);

// Words in g letters of weight 0..W, indexed by weight then lexicographically.
class WordIndex {
 public:
  WordIndex(int g, int W);
  int letters() const { return g_; }
  int cap() const { return W_; }
  int size() const { return offsets_.back(); }
  int offset(int w) const { return offsets_[w]; }
  int count(int w) const { return offsets_[w + 1] - offsets_[w]; }
  int weight(int idx) const;
  int index(const std::vector<int>& word) const;
  std::vector<int> word(int idx) const;
  // Index of the concatenation, or -1 if the weight exceeds the cap.
  int concat(int a, int b) const;

 private:
  int g_, W_;
  std::vector<int> offsets_, powers_;
};

// T(V)/I truncated at weight W, where I is the two-sided ideal generated by
// (possibly inhomogeneous) relations.  Elements are dense vectors over all
// words; normal forms are fully reduced against the ideal with pivots at the
// lowest-weight term, so the normal words give the associated graded basis.
class PresentedAlgebra {
 public:
  PresentedAlgebra(const Field& F, std::vector<std::string> generators, std::vector<Vec> relations, int W);

  const Field& field() const { return F_; }
  const WordIndex& words() const { return words_; }
  int generators() const { return words_.letters(); }
  const std::vector<std::string>& generator_names() const { return names_; }
  const std::vector<Vec>& relations() const { return relations_; }
  int weight_cap() const { return words_.cap(); }
  int dim() const { return static_cast<int>(normal_.size()); }
  std::vector<int> weight_dims() const;
  const std::vector<int>& normal_words() const { return normal_; }

  Vec one() const;
  Vec generator(int a) const;
  Vec word(const std::vector<int>& w) const;
  Vec concat(const Vec& a, const Vec& b) const;  // truncated, not reduced
  Vec reduce(const Vec& v) const;
  Vec multiply(const Vec& a, const Vec& b) const { return reduce(concat(a, b)); }
  Vec to_normal(const Vec& reduced) const;   // coordinates on normal words
  Vec from_normal(const Vec& coords) const;
  bool commutative() const;
  std::string render(const Vec& v) const;

 private:
  Field F_;
  WordIndex words_;
  std::vector<std::string> names_;
  std::vector<Vec> relations_;
  RowReducer ideal_;
  std::vector<int> normal_;
};

PresentedAlgebra truncated_quotient(const Field& F, std::vector<std::string> generators, std::vector<Vec> relations,
                                    int W);

// Minimal interface shared by algebras for map verification.
struct AlgebraView {
  Field F;
  int dim = 0;
  Vec unit;
  std::function<Vec(const Vec&, const Vec&)> mul;
};

AlgebraView view(std::shared_ptr<const AugmentedAlgebra> A);
AlgebraView view(std::shared_ptr<const PresentedAlgebra> P);  // normal coordinates

struct AlgebraMap {
  AlgebraView source, target;
  Mat matrix;  // target.dim x source.dim
};

struct MapReport {
  bool unit = false;
  bool multiplicative = false;
  bool dims_equal = false;
  bool bijective = false;
  bool isomorphism() const { return unit && multiplicative && dims_equal && bijective; }
};

MapReport verify_algebra_map(const AlgebraMap& phi);

}  // namespace ainf
