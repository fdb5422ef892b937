#include "ainf/graded.hpp"

namespace ainf {

namespace {

bool is_zero(const Mat& M) { return (M.array() == 0).all(); }

std::uint64_t derive_seed(std::uint64_t seed, int degree, int kind) {
  if (seed == 0) return 0;
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * static_cast<std::uint64_t>(2 * (degree + 64) + kind + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  z ^= z >> 31;
  return z == 0 ? 1 : z;
}

Mat hstack(const std::vector<const Mat*>& parts, int rows) {
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

CochainComplex::CochainComplex(const Field& F, int lo, int hi, std::vector<int> dims, std::vector<Mat> diffs)
    : F_(F), lo_(lo), hi_(hi), dims_(std::move(dims)), d_(std::move(diffs)) {
  if (hi < lo) throw InputError("complex: empty degree range");
  if (static_cast<int>(dims_.size()) != hi - lo + 3 || static_cast<int>(d_.size()) != hi - lo + 2)
    throw InputError("complex: wrong number of degrees");
  for (int n = lo - 1; n <= hi; ++n) {
    const Mat& m = this->d(n);
    if (m.rows() != dim(n + 1) || m.cols() != dim(n)) throw InputError("complex: block shape mismatch");
  }
  for (auto& m : d_) ds_.push_back(sparse(m));
  for (int n = lo - 1; n < hi; ++n)
    if (!is_zero(F_.mul(d_sparse(n + 1), this->d(n)))) throw GateFailure("complex: d∘d != 0 at degree " + std::to_string(n));
}

int CochainComplex::dim(int n) const {
  if (n < lo_ - 1 || n > hi_ + 1) return 0;
  return dims_[n - lo_ + 1];
}

std::vector<int> cohomology_dims(const CochainComplex& C) {
  const Field& F = C.field();
  std::vector<int> rk;
  for (int n = C.lo() - 1; n <= C.hi(); ++n) rk.push_back(rank(F, C.d(n)));
  std::vector<int> out;
  for (int n = C.lo(); n <= C.hi(); ++n) out.push_back(C.dim(n) - rk[n - C.lo() + 1] - rk[n - C.lo()]);
  return out;
}

HomotopyRetract cohomology_with_retract(const CochainComplex& C, std::uint64_t seed) {
  const Field& F = C.field();
  const int lo = C.lo(), hi = C.hi();
  HomotopyRetract r;
  r.C = C;
  r.seed = seed;
  r.i = GradedMap{lo, hi, 0, {}};
  r.p = GradedMap{lo, hi, 0, {}};
  r.h = GradedMap{lo, hi + 1, -1, {}};

  // Decompositions in carried degrees.
  // Independent rows P of d_hi; the same reduction gives Z^hi.
  const Mat& dtop = C.d(hi);
  RowReducer top(F, static_cast<int>(dtop.cols()));
  std::vector<int> P;
  for (Eigen::Index row = 0; row < dtop.rows() && top.rank() < dtop.cols(); ++row)
    if (top.insert(Vec(dtop.row(row).transpose()))) P.push_back(static_cast<int>(row));

  std::vector<Mat> Bb, Hb, Lb, Tinv;
  for (int n = lo; n <= hi; ++n) {
    const int dn = C.dim(n);
    Mat B = column_space(F, C.d(n - 1));
    Mat Z = n == hi ? top.null_space() : kernel_basis(F, C.d(n));
    Mat Ht = complement(F, B, Z, derive_seed(seed, n, 0));
    Mat L = complement(F, Z, identity(dn), derive_seed(seed, n, 1));
    Mat T = hstack({&B, &Ht, &L}, dn);
    Tinv.push_back(inverse(F, T));
    Bb.push_back(std::move(B));
    Hb.push_back(std::move(Ht));
    Lb.push_back(std::move(L));
  }
  for (int n = lo; n <= hi; ++n) {
    const int k = n - lo;
    const int b = static_cast<int>(Bb[k].cols()), hd = static_cast<int>(Hb[k].cols());
    r.hdims.push_back(hd);
    r.i.blocks.push_back(Hb[k]);
    r.p.blocks.push_back(Tinv[k].middleRows(b, hd));
  }

  // h^lo: needs a complement of the cocycles in degree lo-1.
  {
    const int b = static_cast<int>(Bb[0].cols());
    if (b == 0) {
      r.h.blocks.push_back(Mat::Zero(C.dim(lo - 1), C.dim(lo)));
    } else {
      Mat Zm = kernel_basis(F, C.d(lo - 1));
      Mat Lm = complement(F, Zm, identity(C.dim(lo - 1)), derive_seed(seed, lo - 1, 1));
      Mat Bc = Tinv[0].topRows(b);
      Mat M = F.mul(Bc, F.mul(C.d(lo - 1), Lm));
      r.h.blocks.push_back(F.mul(Lm, F.mul(inverse(F, M), Bc)));
    }
  }
  for (int n = lo + 1; n <= hi; ++n) {
    const int k = n - lo;
    const int b = static_cast<int>(Bb[k].cols());
    if (b == 0) {
      r.h.blocks.push_back(Mat::Zero(C.dim(n - 1), C.dim(n)));
      continue;
    }
    Mat Bc = Tinv[k].topRows(b);
    const Mat& L = Lb[k - 1];
    Mat M = F.mul(Bc, F.mul(C.d(n - 1), L));
    r.h.blocks.push_back(F.mul(L, F.mul(inverse(F, M), Bc)));
  }

  // Top block: coboundaries in degree hi+1 are split off along the span of
  // the standard basis vectors outside an independent set P of rows of d_hi.
  {
    const Mat& L = Lb[hi - lo];
    Mat H = Mat::Zero(C.dim(hi), C.dim(hi + 1));
    if (!P.empty()) {
      Mat dP(P.size(), dtop.cols());
      for (std::size_t t = 0; t < P.size(); ++t) dP.row(t) = dtop.row(P[t]);
      Mat M = F.mul(dP, L);
      Mat X = F.mul(L, inverse(F, M));
      for (std::size_t t = 0; t < P.size(); ++t) H.col(P[t]) = X.col(t);
    }
    r.h.blocks.push_back(std::move(H));
  }
  return r;
}

bool RetractReport::ok() const {
  for (auto& it : items)
    if (!it.ok) return false;
  return true;
}

RetractReport check_retract(const HomotopyRetract& r) {
  const Field& F = r.C.field();
  const auto& C = r.C;
  RetractReport rep;
  auto add = [&](const char* name, int n, bool ok) { rep.items.push_back({name, n, ok}); };
  for (int n = r.lo(); n <= r.hi(); ++n) {
    const Mat& i = r.i.at(n);
    const Mat& p = r.p.at(n);
    const int dn = C.dim(n);
    add("d∘i = 0", n, is_zero(F.mul(C.d_sparse(n), i)));
    add("p∘d = 0", n, is_zero(F.mul(p, C.d_sparse(n - 1))));
    add("p∘i = id", n, F.mul(p, i) == identity(r.hdim(n)));
    const SpMat hn1 = sparse(r.h.at(n + 1));
    Mat lhs = F.reduced(identity(dn) - F.mul(i, p));
    Mat rhs = F.reduced(F.mul(C.d_sparse(n - 1), r.h.at(n)) + F.mul(hn1, C.d(n)));
    add("id - i∘p = d∘h + h∘d", n, lhs == rhs);
    add("h∘h = 0", n, is_zero(F.mul(r.h.at(n), hn1)));
    add("h∘i = 0", n, is_zero(F.mul(r.h.at(n), i)));
    add("p∘h = 0", n, is_zero(F.mul(p, hn1)));
  }
  return rep;
}

}  // namespace ainf
