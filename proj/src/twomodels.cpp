#include "ainf/twomodels.hpp"

namespace ainf {

namespace {

Mat hcat(const std::vector<const Mat*>& parts, int rows) {
  int cols = 0;
  for (auto* m : parts) cols += static_cast<int>(m->cols());
  Mat out(rows, cols);
  int c = 0;
  for (auto* m : parts) {
    out.middleCols(c, m->cols()) = *m;
    c += static_cast<int>(m->cols());
  }
  return out;
}


}  // namespace

// ---------------------------------------------------------------- E

EndDga::EndDga(std::shared_ptr<const AugmentedAlgebra> A, int depth, int max_dim)
    : A_(std::move(A)), L_(depth), m_(A_->abar_dim()), nA_(A_->dim()) {
  if (depth < 1) throw InputError("end dga: depth must be >= 1");
  pow_.assign(2 * depth + 2, 1);
  for (std::size_t k = 1; k < pow_.size(); ++k) pow_[k] = pow_[k - 1] * m_;
  dim_.assign(L_ + 1, 0);
  off_.resize(L_ + 1);
  for (int n = 0; n <= L_; ++n) {
    long long total = 0;
    for (int i = n; i <= L_; ++i) {
      off_[n].push_back(static_cast<int>(total));
      total += static_cast<long long>(pow_[i]) * nA_ * pow_[i - n];
      if (n >= 1 && total > max_dim)
        throw InputError("end dga: E^" + std::to_string(n) + " exceeds the size guard " + std::to_string(max_dim) +
                         " (dim A = " + std::to_string(nA_) + ", depth " + std::to_string(L_) + ")");
    }
    dim_[n] = static_cast<int>(total);
  }
  const Field& F = field();
  del_ = Vec::Zero(dim_[1]);
  for (int i = 1; i <= L_; ++i)
    for (int w = 0; w < pow_[i]; ++w) {
      std::vector<int> letters(i);
      for (int k = 0, x = w; k < i; ++k, x /= m_) letters[i - 1 - k] = x % m_;
      // a_1 [a_2 | .. | a_i]
      del_(index(1, i, w, letters[0] + 1, w % pow_[i - 1])) += 1;
      // Σ_j (-1)^j [.. | a_j a_{j+1} | ..]
      for (int j = 1; j < i; ++j) {
        const Vec& prod = A_->prod(letters[j - 1] + 1, letters[j] + 1);
        if (prod(0) != 0) throw GateFailure("end dga: augmentation ideal is not closed");
        for (int k = 1; k < nA_; ++k) {
          if (prod(k) == 0) continue;
          std::vector<int> u(letters.begin(), letters.begin() + j - 1);
          u.push_back(k - 1);
          u.insert(u.end(), letters.begin() + j + 1, letters.end());
          int ui = 0;
          for (int l : u) ui = ui * m_ + l;
          Int& slot = del_(index(1, i, w, 0, ui));
          slot = F.reduce(slot + F.sign(j) * prod(k));
        }
      }
    }
  del_ = F.reduced(del_);
}

int EndDga::index(int n, int i, int w, int a, int u) const {
  return off_[n][i - n] + (w * nA_ + a) * pow_[i - n] + u;
}

Vec EndDga::compose(int a, const Vec& Fv, int b, const Vec& Gv) const {
  const Field& F = field();
  if (a + b > L_) return Vec::Zero(0);
  Vec out = Vec::Zero(dim_[a + b]);
  for (int i = a + b; i <= L_; ++i) {
    // G_i: length i -> i - b;  F_{i-b}: length i - b -> i - b - a.
    const int ub = pow_[i - b], vb = pow_[i - b - a];
    for (int w = 0; w < pow_[i]; ++w)
      for (int c = 0; c < nA_; ++c)
        for (int u = 0; u < ub; ++u) {
          const Int g = Gv(index(b, i, w, c, u));
          if (g == 0) continue;
          for (int c2 = 0; c2 < nA_; ++c2) {
            const int base = index(a, i - b, u, c2, 0);
            const Vec& pr = A_->prod(c, c2);
            for (int v = 0; v < vb; ++v) {
              const Int f = Fv(base + v);
              if (f == 0) continue;
              const Int gf = F.reduce(g * f);
              for (int e = 0; e < nA_; ++e)
                if (pr(e) != 0) {
                  Int& slot = out(index(a + b, i, w, e, v));
                  slot = F.reduce(slot + gf * pr(e));
                }
            }
          }
        }
  }
  return out;
}

Vec EndDga::d(int n, const Vec& Fv) const {
  const Field& F = field();
  if (n + 1 > L_) return Vec::Zero(0);
  Vec a = compose(1, del_, n, Fv);
  Vec b = compose(n, Fv, 1, del_);
  return F.reduced(Vec(a - F.sign(n) * b));
}

Mat EndDga::d_matrix(int n) const {
  if (n + 1 > L_) throw InputError("end dga: differential beyond the depth");
  Mat D(dim_[n + 1], dim_[n]);
  for (int k = 0; k < dim_[n]; ++k) D.col(k) = d(n, Vec::Unit(dim_[n], k));
  return D;
}

Vec EndDga::identity() const {
  Vec v = Vec::Zero(dim_[0]);
  for (int i = 0; i <= L_; ++i)
    for (int w = 0; w < pow_[i]; ++w) v(index(0, i, w, 0, w)) = 1;
  return v;
}

Mat EndDga::psi_matrix(int n) const {
  const Field& F = field();
  if (n < 1 || n > L_) throw InputError("psi: degree out of range");
  Mat P = Mat::Zero(dim_[n], pow_[n]);
  for (int i = n; i <= L_; ++i) {
    const Int s = F.sign(n * (i - n) + n * (n + 1) / 2);
    for (int w = 0; w < pow_[i]; ++w) P(index(n, i, w, 0, w / pow_[n]), w % pow_[n]) = s;
  }
  return P;
}

Mat EndDga::phi_matrix(int n) const {
  if (n < 1 || n > L_) throw InputError("phi: degree out of range");
  Mat P = Mat::Zero(pow_[n], dim_[n]);
  for (int w = 0; w < pow_[n]; ++w) P(w, index(n, n, w, 0, 0)) = field().sign(n * (n + 1) / 2);
  return P;
}

// ---------------------------------------------------------------- E'

EndModel end_model(std::shared_ptr<const AugmentedAlgebra> A, int depth, int hi, int max_dim) {
  if (hi < 1 || hi + 1 > depth) throw InputError("end model: need 1 <= hi < depth");
  EndModel M;
  auto E = std::make_shared<const EndDga>(A, depth, max_dim);
  M.E = E;
  M.hi = hi;
  const Field& F = E->field();
  const int L = depth, n0 = E->full_dim(0), n1 = E->full_dim(1);
  const int nA = A->dim(), m = A->abar_dim();
  int words = 1, shorter = 1;  // m^L, m^{L-1}
  for (int k = 0; k < L; ++k) words *= m;
  for (int k = 0; k + 1 < L; ++k) shorter *= m;
  const int q = nA * shorter;  // rank of P_{L-1}
  const int topE0 = E->index(0, L, 0, 0, 0), topE1 = E->index(1, L, 0, 0, 0);
  auto d0 = [&](int k) -> Vec { return E->d(0, Vec::Unit(n0, k)); };

  // S = im ∂_L ⊂ P_{L-1}, read off the w = 0 block.
  RowReducer S(F, q);
  for (int k = 0; k < nA * words; ++k) S.insert(Vec(d0(topE0 + k).segment(topE1, q)));
  std::vector<int> free_cols;
  for (int c = 0; c < q; ++c)
    if (S.pivot_row(c) < 0) free_cols.push_back(c);
  // Coordinates of E^1 / (⊕_w S): lower lengths as they are, then the free
  // columns of each length-L block.
  std::vector<int> coord;
  for (int j = 0; j < topE1; ++j) coord.push_back(j);
  for (int w = 0; w < words; ++w)
    for (int c : free_cols) coord.push_back(topE1 + w * q + c);
  const int nR = static_cast<int>(coord.size());
  auto project = [&](const Vec& x) -> Vec {
    Vec out(nR);
    for (int j = 0; j < topE1; ++j) out(j) = x(j);
    int k = topE1;
    for (int w = 0; w < words; ++w) {
      Vec blk = S.reduce(Vec(x.segment(topE1 + w * q, q)));
      for (int c : free_cols) out(k++) = blk(c);
    }
    return out;
  };
  RowReducer BR(F, nR);
  for (int k = 0; k < topE0; ++k) BR.insert(project(d0(k)));
  const Mat P1 = E->psi_matrix(1);
  for (int j = 0; j < P1.cols(); ++j)
    if (!BR.insert(project(Vec(P1.col(j))))) throw GateFailure("end model: Ψ(C^1) meets d(E^0)");
  std::vector<Eigen::Triplet<Int>> trip;
  for (int j = 0; j < P1.cols(); ++j)
    for (int i = 0; i < n1; ++i)
      if (P1(i, j) != 0) trip.emplace_back(i, j, P1(i, j));
  int cols = static_cast<int>(P1.cols());
  for (int c = 0; c < nR; ++c)
    if (BR.pivot_row(c) < 0) trip.emplace_back(coord[c], cols++, 1);
  M.K = SpMat(n1, cols);
  M.K.setFromTriplets(trip.begin(), trip.end());
  M.K.makeCompressed();

  std::vector<int> dims{0, static_cast<int>(M.K.cols())};
  for (int n = 2; n <= hi + 1; ++n) dims.push_back(E->full_dim(n));
  Mat d1(E->full_dim(2), M.K.cols());
  for (int j = 0; j < M.K.cols(); ++j) d1.col(j) = E->d(1, Vec(M.K.col(j)));
  std::vector<Mat> d{Mat::Zero(M.K.cols(), 0), d1};
  for (int n = 2; n <= hi; ++n) d.push_back(E->d_matrix(n));
  SpMat K = M.K;
  DgAlgebra::Mul mul = [E, K, hi](int a, const Vec& u, int b, const Vec& v) -> Vec {
    if (a + b > hi) return Vec();
    const Field& F = E->field();
    Vec U = a == 1 ? F.mul(K, u) : u;
    Vec V = b == 1 ? F.mul(K, v) : v;
    return E->compose(a, U, b, V);
  };
  M.dga = DgAlgebra(CochainComplex(F, 1, hi, dims, d), mul);
  M.dga.label = "E'(" + A->label + ")";
  M.cochains = hochschild_dga(*A, hi, true);

  const int m1 = static_cast<int>(P1.cols());
  Mat psi1 = Mat::Zero(M.K.cols(), m1);
  psi1.topRows(m1) = identity(m1);
  M.psi.push_back(psi1);
  M.phi.push_back(F.mul(E->phi_matrix(1), M.K));
  for (int n = 2; n <= hi + 1; ++n) {
    M.psi.push_back(E->psi_matrix(n));
    M.phi.push_back(E->phi_matrix(n));
  }
  return M;
}

SegalReport check_segal(const EndModel& M) {
  const Field& F = M.E->field();
  const auto& CE = M.dga.complex();
  const auto& CC = M.cochains.complex();
  SegalReport r;
  r.psi_chain = r.phi_chain = r.phi_psi_identity = true;
  for (int n = 1; n <= M.hi; ++n) {
    r.psi_chain = r.psi_chain && F.mul(CE.d(n), M.psi_at(n)) == F.mul(M.psi_at(n + 1), CC.d(n));
    r.phi_chain = r.phi_chain && F.mul(M.phi_at(n + 1), CE.d(n)) == F.mul(CC.d(n), M.phi_at(n));
  }
  for (int n = 1; n <= M.hi + 1; ++n) r.phi_psi_identity = r.phi_psi_identity && F.mul(M.phi_at(n), M.psi_at(n)) == identity(M.psi_at(n).cols());
  r.psi_multiplicative = true;
  for (int a = 1; a <= M.hi; ++a)
    for (int b = 1; a + b <= M.hi; ++b)
      for (int x = 0; x < CC.dim(a) && r.psi_multiplicative; ++x)
        for (int y = 0; y < CC.dim(b) && r.psi_multiplicative; ++y) {
          Vec ex = Vec::Unit(CC.dim(a), x), ey = Vec::Unit(CC.dim(b), y);
          Vec lhs = F.mul(M.psi_at(a + b), M.cochains.mul(a, ex, b, ey));
          Vec rhs = M.dga.mul(a, Vec(M.psi_at(a).col(x)), b, Vec(M.psi_at(b).col(y)));
          r.psi_multiplicative = lhs == rhs;
        }
  // H(Ψ) is bijective iff dim H_E = dim H_C and Ψ(H̃_C) meets B_E trivially.
  auto rc = cohomology_with_retract(CC);
  r.h_psi_bijective = true;
  for (int n = 1; n <= M.hi && r.h_psi_bijective; ++n) {
    Mat B = column_space(F, CE.d(n - 1));
    const int z = CE.dim(n) - rank(F, CE.d(n));
    Mat Ht = F.mul(M.psi_at(n), rc.i.at(n));
    Mat BH(CE.dim(n), B.cols() + Ht.cols());
    BH << B, Ht;
    r.h_psi_bijective = z - B.cols() == rc.hdim(n) && rank(F, BH) == B.cols() + Ht.cols();
  }
  return r;
}

// ---------------------------------------------------------------- retracts

HomotopyRetract adapted_retract(const EndModel& M, const HomotopyRetract& rc) {
  const Field& F = M.E->field();
  const auto& CE = M.dga.complex();
  const int hi = M.hi;
  HomotopyRetract r;
  r.C = CE;
  r.seed = rc.seed;
  r.i = GradedMap{1, hi, 0, {}};
  r.p = GradedMap{1, hi, 0, {}};
  r.h = GradedMap{1, hi + 1, -1, {}};
  std::vector<Mat> Bs, Ls, Tinv;
  for (int n = 1; n <= hi; ++n) {
    const int dn = CE.dim(n);
    Mat B = column_space(F, CE.d(n - 1));
    Mat Z = kernel_basis(F, CE.d(n));
    Mat Ht = F.mul(M.psi_at(n), rc.i.at(n));
    Mat PL = F.mul(M.psi_at(n), column_space(F, rc.h.at(n + 1)));
    Mat ZL = hcat({&Z, &PL}, dn);
    Mat Lpp = complement(F, column_space(F, ZL), identity(dn));
    Mat L = hcat({&PL, &Lpp}, dn);
    Mat T = hcat({&B, &Ht, &L}, dn);
    if (T.cols() != dn || rank(F, T) != dn) throw GateFailure("adapted retract: decomposition is not a splitting");
    Tinv.push_back(inverse(F, T));
    r.hdims.push_back(static_cast<int>(Ht.cols()));
    r.i.blocks.push_back(Ht);
    r.p.blocks.push_back(Tinv.back().middleRows(B.cols(), Ht.cols()));
    Bs.push_back(std::move(B));
    Ls.push_back(std::move(L));
  }
  r.h.blocks.push_back(Mat::Zero(0, CE.dim(1)));
  auto h_from = [&](const Mat& Bc, int n) -> Mat {
    // Inverse of d restricted to L^{n-1}, on the B-coordinates Bc.
    const Mat& L = Ls[n - 2];
    Mat Mx = F.mul(Bc, F.mul(CE.d(n - 1), L));
    return F.mul(L, F.mul(inverse(F, Mx), Bc));
  };
  for (int n = 2; n <= hi; ++n) {
    const int b = static_cast<int>(Bs[n - 1].cols());
    if (b == 0) {
      r.h.blocks.push_back(Mat::Zero(CE.dim(n - 1), CE.dim(n)));
      continue;
    }
    r.h.blocks.push_back(h_from(Tinv[n - 1].topRows(b), n));
  }
  // Top: d(E^hi) split off along a complement containing Ψ(ker h_C).
  {
    const int top = hi + 1, dt = CE.dim(top);
    Mat B = column_space(F, CE.d(hi));
    Mat K0 = column_space(F, F.mul(M.psi_at(top), kernel_basis(F, rc.h.at(top))));
    Mat BK = hcat({&B, &K0}, dt);
    Mat Kc;
    if (rank(F, BK) == B.cols() + K0.cols()) {
      Mat more = complement(F, column_space(F, BK), identity(dt));
      Kc = hcat({&K0, &more}, dt);
    } else {
      Kc = complement(F, B, identity(dt));
    }
    if (B.cols() == 0) {
      r.h.blocks.push_back(Mat::Zero(CE.dim(hi), dt));
    } else {
      Mat T = hcat({&B, &Kc}, dt);
      r.h.blocks.push_back(h_from(inverse(F, T).topRows(B.cols()), top));
    }
  }
  return r;
}

CompatibleRetract compatible_retract(const EndModel& M, const HomotopyRetract& rE, const std::vector<Mat>& hpsi) {
  const Field& F = M.E->field();
  const int hi = M.hi;
  CompatibleRetract out;
  HomotopyRetract& r = out.retract;
  r.C = M.cochains.complex();
  r.seed = rE.seed;
  r.i = GradedMap{1, hi, 0, {}};
  r.p = GradedMap{1, hi, 0, {}};
  r.h = GradedMap{1, hi + 1, -1, {}};
  out.square_i = out.square_p = out.square_h = true;
  for (int n = 1; n <= hi; ++n) {
    const Mat& H = hpsi[n - 1];
    Mat Hinv = inverse(F, H);
    Mat i2 = F.mul(M.phi_at(n), F.mul(rE.i.at(n), H));
    Mat p2 = F.mul(Hinv, F.mul(rE.p.at(n), M.psi_at(n)));
    r.hdims.push_back(static_cast<int>(H.cols()));
    out.square_i = out.square_i && F.mul(M.psi_at(n), i2) == F.mul(rE.i.at(n), H);
    out.square_p = out.square_p && F.mul(H, p2) == F.mul(rE.p.at(n), M.psi_at(n));
    r.i.blocks.push_back(std::move(i2));
    r.p.blocks.push_back(std::move(p2));
  }
  r.h.blocks.push_back(Mat::Zero(0, r.C.dim(1)));
  for (int n = 2; n <= hi + 1; ++n) {
    Mat h2 = F.mul(M.phi_at(n - 1), F.mul(rE.h.at(n), M.psi_at(n)));
    out.square_h = out.square_h && F.mul(M.psi_at(n - 1), h2) == F.mul(rE.h.at(n), M.psi_at(n));
    r.h.blocks.push_back(std::move(h2));
  }
  out.identities = check_retract(r);
  return out;
}

// ---------------------------------------------------------------- Υ

bool TwoModelReport::ok() const {
  return h_c == h_e && segal.ok() && compatible && m_c.ok() && m_e.ok() && psi_morphism.ok() &&
         upsilon_morphism.ok() && upsilon1_is_h_psi && upsilon_iso && hull_c == hull_e;
}

TwoModelReport upsilon(std::shared_ptr<const AugmentedAlgebra> A, int depth, std::uint64_t seed, int N, int max_dim) {
  if (depth < 2) throw InputError("compare-models: depth must be >= 2");
  TwoModelReport rep;
  rep.algebra = A->label;
  rep.depth = depth;
  rep.hi = depth - 1;
  auto M = end_model(A, depth, rep.hi, max_dim);
  const Field& F = M.E->field();
  for (int n = 1; n <= rep.hi; ++n) rep.e_dims.push_back(M.dga.dim(n));
  rep.h_c = cohomology_dims(M.cochains.complex());
  rep.h_e = cohomology_dims(M.dga.complex());
  rep.segal = check_segal(M);

  auto rc = cohomology_with_retract(M.cochains.complex(), seed);
  auto rc2 = cohomology_with_retract(M.cochains.complex(), seed + 1);
  auto rE = adapted_retract(M, rc2);
  if (!check_retract(rE).ok()) throw GateFailure("compare-models: adapted retract fails the retract identities");
  for (int n = 1; n <= rep.hi; ++n) rep.h_psi.push_back(F.mul(rE.p.at(n), F.mul(M.psi_at(n), rc.i.at(n))));
  auto compat = compatible_retract(M, rE, rep.h_psi);
  rep.compatible = compat.ok();

  auto mmE = minimal_model(M.dga, rE, N);
  auto mmC = minimal_model(M.cochains, compat.retract, N);
  rep.m_c = check_structure(*mmC.model, N);
  rep.m_e = check_structure(*mmE.model, N);
  std::vector<Mat> psi_blocks(M.psi.begin(), M.psi.begin() + rep.hi);
  auto psiS = strict_morphism(mmC.source, mmE.source, psi_blocks);
  rep.psi_morphism = check_morphism(psiS, N);
  auto U = compose(mmE.g, compose(psiS, mmC.f));
  rep.upsilon_morphism = check_morphism(U, N);
  rep.upsilon1_is_h_psi = true;
  for (int n = 1; n <= rep.hi; ++n) rep.upsilon1_is_h_psi = rep.upsilon1_is_h_psi && U.linear(n) == rep.h_psi[n - 1];
  rep.upsilon_iso = is_isomorphism(U);

  const int W = std::min(std::max(A->nilpotency_index(), 1), N);
  rep.hull_c = classical_hull(dual_bar(mmC.model, W)).weight_dims();
  rep.hull_e = classical_hull(dual_bar(mmE.model, W)).weight_dims();
  for (auto& [w, v] : nonzero_products(*mmC.model, N))
    if (w.size() >= 3) rep.products_c[w] = v;
  for (auto& [w, v] : nonzero_products(*mmE.model, N))
    if (w.size() >= 3) rep.products_e[w] = v;
  return rep;
}

}  // namespace ainf
