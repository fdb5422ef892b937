#include "ainf/changegroup.hpp"

#include <set>
#include <sstream>

namespace ainf {

namespace {

Mat kron(const Mat& A, const Mat& B) {
  Mat out(A.rows() * B.rows(), A.cols() * B.cols());
  for (Eigen::Index i = 0; i < A.rows(); ++i)
    for (Eigen::Index j = 0; j < A.cols(); ++j) out.block(i * B.rows(), j * B.cols(), B.rows(), B.cols()) = A(i, j) * B;
  return out;
}

SubgroupInclusion make_inclusion(const FiniteGroupData& G, std::vector<int> members, Int p, std::string label) {
  auto [K, emb] = subgroup(G, members);
  SubgroupInclusion inc{G, std::move(K), std::move(emb), p, std::move(label)};
  if (inc.label.empty()) {
    inc.label = "<";
    for (std::size_t k = 0; k < inc.embedding.size(); ++k) inc.label += (k ? "," : "") + G.elements[inc.embedding[k]];
    inc.label += ">";
  }
  return inc;
}

// Multiplication Ā ⊗ Ā -> Ā, columns indexed a·m + b.
Mat abar_product(const AugmentedAlgebra& A) {
  const int m = A.abar_dim();
  Mat M(m, m * m);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) M.col(a * m + b) = A.prod(a + 1, b + 1).tail(m);
  return M;
}

std::string render_element(const AugmentedAlgebra& A, const Vec& u) {
  std::ostringstream os;
  bool first = true;
  for (int k = 0; k < u.size(); ++k) {
    if (u(k) == 0) continue;
    if (!first) os << " + ";
    first = false;
    const std::string& name = A.names()[k];
    if (k == 0) {
      os << u(k);
    } else {
      if (u(k) != 1) os << u(k) << "*";
      os << "(" << name << ")";
    }
  }
  return first ? "0" : os.str();
}

}  // namespace

SubgroupInclusion inclusion(const FiniteGroupData& G, const std::vector<int>& generators, Int p, std::string label) {
  std::set<int> S{G.identity};
  for (int g : generators) {
    if (g < 0 || g >= G.order()) throw InputError("subgroup: element index " + std::to_string(g) + " out of range");
    S.insert(g);
  }
  for (bool grew = true; grew;) {
    grew = false;
    std::vector<int> cur(S.begin(), S.end());
    for (int a : cur)
      for (int b : cur) grew = S.insert(G.mult[a][b]).second || grew;
  }
  return make_inclusion(G, std::vector<int>(S.begin(), S.end()), p, std::move(label));
}

SubgroupInclusion center_inclusion(const FiniteGroupData& G, Int p, std::string label) {
  std::vector<int> Z;
  for (int a = 0; a < G.order(); ++a) {
    bool central = true;
    for (int b = 0; b < G.order() && central; ++b) central = G.mult[a][b] == G.mult[b][a];
    if (central) Z.push_back(a);
  }
  return make_inclusion(G, Z, p, label.empty() ? "Z(G)" : std::move(label));
}

SubgroupInclusion parse_inclusion(const std::string& catalog_name, const std::string& spec, Int p) {
  auto entry = catalog(catalog_name, p);
  if (!entry.group) throw InputError("restrict: '" + catalog_name + "' is not a group algebra");
  const FiniteGroupData& G = *entry.group;
  if (spec == "center") return center_inclusion(G, p, "Z(" + catalog_name + ")");
  std::vector<int> gens;
  std::stringstream ss(spec);
  for (std::string tok; std::getline(ss, tok, ',');) {
    if (tok.empty()) continue;
    auto it = std::find(G.elements.begin(), G.elements.end(), tok);
    if (it != G.elements.end()) {
      gens.push_back(static_cast<int>(it - G.elements.begin()));
      continue;
    }
    try {
      std::size_t used = 0;
      int g = std::stoi(tok, &used);
      if (used != tok.size()) throw std::invalid_argument(tok);
      gens.push_back(g);
    } catch (const std::logic_error&) {
      throw InputError("restrict: unknown group element '" + tok + "'");
    }
  }
  if (gens.empty()) throw InputError("restrict: empty subgroup specification");
  return inclusion(G, gens, p, "<" + spec + "> in " + catalog_name);
}

Mat inclusion_matrix(const SubgroupInclusion& inc, const AugmentedAlgebra& kG, const AugmentedAlgebra& kK) {
  const Field& F = kG.field();
  Mat E = Mat::Zero(inc.G.order(), inc.K.order());
  for (int k = 0; k < inc.K.order(); ++k) E(inc.embedding[k], k) = 1;
  Mat J = F.mul(inverse(F, kG.to_input()), F.mul(E, kK.to_input()));
  if (J(0, 0) != 1 || (J.row(0).tail(J.cols() - 1).array() != 0).any() || (J.col(0).tail(J.rows() - 1).array() != 0).any())
    throw GateFailure("inclusion does not respect the augmentation");
  return J;
}

// (M^{⊗n}) v without forming the Kronecker power: one tensor mode at a time.
Vec apply_tensor_power(const Field& F, const Mat& M, int n, const Vec& v) {
  const Eigen::Index r = M.rows(), c = M.cols();
  Vec cur = v;
  // cur is laid out as [done modes (size r each)] x [pending modes (size c each)].
  Eigen::Index left = 1, right = 1;
  for (int k = 1; k < n; ++k) right *= c;
  for (int k = 0; k < n; ++k) {
    Vec next = Vec::Zero(left * r * right);
    for (Eigen::Index a = 0; a < left; ++a)
      for (Eigen::Index j = 0; j < c; ++j)
        for (Eigen::Index b = 0; b < right; ++b) {
          const Int x = cur((a * c + j) * right + b);
          if (x == 0) continue;
          for (Eigen::Index i = 0; i < r; ++i)
            if (M(i, j) != 0) next((a * r + i) * right + b) += M(i, j) * x;
        }
    cur = F.reduced(next);
    left *= r;
    if (k + 1 < n) right /= c;
  }
  return cur;
}

CochainRestriction restrict_cochains(const Mat& J, const DgAlgebra& CG, const DgAlgebra& CK) {
  const Field& F = CG.field();
  const auto& G = CG.complex();
  const auto& K = CK.complex();
  if (G.lo() != 1 || K.lo() != 1 || G.hi() != K.hi()) throw InputError("restrict: cochain complexes need a shared degree cap");
  const int D = G.hi();
  CochainRestriction r;
  r.J = J;
  Mat JbT = J.bottomRightCorner(J.rows() - 1, J.cols() - 1).transpose();
  std::vector<Mat> R{JbT};
  for (int n = 2; n <= D; ++n) R.push_back(kron(JbT, R.back()));
  // R_{n+1} d_G = d_K R_n, column by column (R_{D+1} is never formed).
  r.chain_map = true;
  for (int n = 1; n <= D && r.chain_map; ++n) {
    Mat rhs = F.mul(K.d_sparse(n), R[n - 1]);
    for (int x = 0; x < G.dim(n) && r.chain_map; ++x)
      r.chain_map = apply_tensor_power(F, JbT, n + 1, Vec(G.d(n).col(x))) == rhs.col(x);
  }
  r.multiplicative = true;
  for (int a = 1; a <= D; ++a)
    for (int b = 1; a + b <= D; ++b)
      for (int x = 0; x < G.dim(a) && r.multiplicative; ++x)
        for (int y = 0; y < G.dim(b) && r.multiplicative; ++y) {
          Vec ex = Vec::Unit(G.dim(a), x), ey = Vec::Unit(G.dim(b), y);
          Vec lhs = F.mul(R[a + b - 1], CG.mul(a, ex, b, ey));
          Vec rhs = CK.mul(a, Vec(R[a - 1].col(x)), b, Vec(R[b - 1].col(y)));
          r.multiplicative = lhs == rhs;
        }
  r.blocks = std::move(R);
  return r;
}

AInfMorphism eta(const CochainRestriction& r, const MinimalModelStructure& mmG, const MinimalModelStructure& mmK) {
  auto restr = strict_morphism(mmG.source, mmK.source, r.blocks);
  auto e = compose(mmK.g, compose(restr, mmG.f));
  e.label = "eta";
  return e;
}

bool eta1_is_functorial(const AInfMorphism& e, const Mat& J, const AugmentedAlgebra& kG, const AugmentedAlgebra& kK,
                        const MinimalModelStructure& mmG, const MinimalModelStructure& mmK) {
  const Field& F = kG.field();
  // Ext^1 = annihilator of Ā² in Ā^*.
  Mat ZG = kernel_basis(F, abar_product(kG).transpose());
  Mat ZK = kernel_basis(F, abar_product(kK).transpose());
  Mat JbT = J.bottomRightCorner(J.rows() - 1, J.cols() - 1).transpose();
  auto coords = [&](const Mat& basis, const Mat& v) -> std::optional<Mat> {
    Mat out(basis.cols(), v.cols());
    for (Eigen::Index c = 0; c < v.cols(); ++c) {
      auto x = solve(F, basis, Vec(v.col(c)));
      if (!x) return std::nullopt;
      out.col(c) = *x;
    }
    return out;
  };
  auto Fz = coords(ZK, F.mul(JbT, ZG));
  auto AG = coords(ZG, mmG.retract->i.at(1));
  auto AK = coords(ZK, mmK.retract->i.at(1));
  if (!Fz || !AG || !AK) return false;
  if (AK->rows() != AK->cols() || rank(F, *AK) != AK->rows()) return false;
  return e.linear(1) == F.mul(inverse(F, *AK), F.mul(*Fz, *AG));
}

bool FunctorialityReport::ok() const {
  const bool commutative = K.algebra_commutative;
  return restriction.chain_map && restriction.multiplicative && eta_morphism.ok() && eta1_functorial &&
         relations_preserved && hull_map_report.unit && hull_map_report.multiplicative && conjugator.has_value() &&
         (!commutative || exact);
}

FunctorialityReport diagram_check(const SubgroupInclusion& inc, std::uint64_t seedG, std::uint64_t seedK, Caps caps, int eta_weight) {
  FunctorialityReport rep;
  rep.label = inc.label;
  rep.p = inc.p;
  auto kG = std::make_shared<AugmentedAlgebra>(group_algebra(inc.G, inc.p));
  auto kK = std::make_shared<AugmentedAlgebra>(group_algebra(inc.K, inc.p));
  kG->label = "k[G]";
  kK->label = "k[K]";
  const Field& F = kG->field();

  // Shared caps: one degree cap for the restriction, one weight cap for both hulls.
  Caps c = caps;
  if (c.degree == 0) c.degree = std::min(default_degree_cap(*kG), default_degree_cap(*kK));
  if (c.weight == 0) c.weight = std::max(kG->nilpotency_index(), kK->nilpotency_index());
  if (c.arity == 0) c.arity = std::max(c.weight, 4);
  rep.weight = c.weight;
  rep.G = verify_reconstruction(kG, seedG, c);
  rep.K = verify_reconstruction(kK, seedK, c);
  const auto& mmG = *rep.G.model;
  const auto& mmK = *rep.K.model;

  const Mat J = inclusion_matrix(inc, *kG, *kK);
  rep.restriction = restrict_cochains(J, *mmG.dga, *mmK.dga);
  rep.eta = eta(rep.restriction, mmG, mmK);
  rep.eta_weight = eta_weight > 0 ? std::min(eta_weight, c.arity) : c.arity;
  rep.eta_morphism = check_morphism(rep.eta, rep.eta_weight);
  rep.eta1_functorial = eta1_is_functorial(rep.eta, J, *kG, *kK, mmG, mmK);

  // Dual of η on generators: x^K_e ↦ Σ_α [η_n(α)]_e x^α over words α in H^1(G).
  const auto& hG = *rep.G.hull;
  const auto& hK = *rep.K.hull;
  const WordIndex& wG = hG.words();
  const WordIndex& wK = hK.words();
  std::vector<Vec> gen(hK.generators(), Vec::Zero(wG.size()));
  for (int n = 1; n <= std::min(wG.cap(), rep.eta.cap()); ++n) {
    std::vector<int> degs(n, 1);
    for (int w = wG.offset(n); w < wG.offset(n) + wG.count(n); ++w) {
      Vec v = rep.eta.f_basis(degs, wG.word(w));
      if (v.size() == 0) continue;
      for (int e = 0; e < hK.generators(); ++e) gen[e](w) = v(e);
    }
  }
  // Images of all words of hull_K, reduced in hull_G.
  std::vector<Vec> img(wK.size());
  img[0] = hG.one();
  for (int w = 1; w < wK.size(); ++w) {
    auto word = wK.word(w);
    const int last = word.back();
    word.pop_back();
    img[w] = hG.multiply(img[wK.index(word)], gen[last]);
  }
  auto image = [&](const Vec& v) -> Vec {
    Vec out = Vec::Zero(wG.size());
    for (int w = 0; w < v.size(); ++w)
      if (v(w) != 0) out += v(w) * img[w];
    return hG.reduce(F.reduced(out));
  };
  rep.relations_preserved = true;
  for (auto& r : hK.relations()) rep.relations_preserved = rep.relations_preserved && (image(r).array() == 0).all();
  Mat H(hG.dim(), hK.dim());
  for (int j = 0; j < hK.dim(); ++j) H.col(j) = hG.to_normal(image(hK.from_normal(Vec::Unit(hK.dim(), j))));
  rep.hull_map = AlgebraMap{view(rep.K.hull), view(rep.G.hull), H};
  rep.hull_map_report = verify_algebra_map(rep.hull_map);

  rep.top = F.mul(rep.G.rho.matrix, J);
  rep.bottom = F.mul(H, rep.K.rho.matrix);
  rep.exact = rep.top == rep.bottom;
  const int nK = kK->dim();
  if (rep.exact) {
    rep.conjugator = Vec::Unit(nK, 0);
  } else {
    // bottom(x)·top(u) = top(u)·top(x) for all x: linear in u.
    auto mul = rep.hull_map.target.mul;
    const int d = hG.dim();
    Mat S(d * nK, nK);
    for (int y = 0; y < nK; ++y)
      for (int x = 0; x < nK; ++x) {
        Vec tu = rep.top.col(y), tx = rep.top.col(x), bx = rep.bottom.col(x);
        S.block(x * d, y, d, 1) = F.reduced(Vec(mul(bx, tu) - mul(tu, tx)));
      }
    Mat N = kernel_basis(F, S);
    for (Eigen::Index k = 0; k < N.cols() && !rep.conjugator; ++k)
      if (N(0, k) != 0) rep.conjugator = F.reduced(Vec(F.inv(N(0, k)) * N.col(k)));
    if (!rep.conjugator) {
      std::ostringstream os;
      os << "no unit of k[K] conjugates the two composites; solution space dimension " << N.cols()
         << "; first differing column";
      for (int x = 0; x < nK; ++x)
        if (rep.top.col(x) != rep.bottom.col(x)) {
          os << " " << x << ": " << hG.render(hG.from_normal(rep.top.col(x))) << " vs "
             << hG.render(hG.from_normal(rep.bottom.col(x)));
          break;
        }
      rep.diagnostic = os.str();
    }
  }
  if (rep.conjugator) rep.conjugator_text = render_element(*kK, *rep.conjugator);
  return rep;
}

}  // namespace ainf
