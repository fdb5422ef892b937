#include "ainf/hochschild.hpp"

namespace ainf {

DgAlgebra::DgAlgebra(CochainComplex complex, Mul mul, bool kronecker)
    : C_(std::move(complex)), mul_(std::move(mul)), kronecker_(kronecker) {}

Vec DgAlgebra::mul(int a, const Vec& u, int b, const Vec& v) const {
  if (a + b > hi() + 1 || a < lo() || b < lo()) return Vec();
  return mul_(a, u, b, v);
}

const ProductBlock& DgAlgebra::block(int a, int b) const {
  std::lock_guard<std::mutex> lock(*mu_);
  auto& slot = blocks_[{a, b}];
  if (slot) return *slot;
  auto blk = std::make_shared<ProductBlock>();
  blk->a = a;
  blk->b = b;
  blk->kronecker = kronecker_;
  const int da = dim(a), db = dim(b);
  blk->terms.resize(static_cast<std::size_t>(da) * db);
  if (a + b <= hi() + 1) {
    for (int x = 0; x < da; ++x)
      for (int y = 0; y < db; ++y) {
        auto& t = blk->terms[static_cast<std::size_t>(x) * db + y];
        if (kronecker_) {
          t.push_back({x * db + y, 1});
          continue;
        }
        Vec w = mul_(a, Vec::Unit(da, x), b, Vec::Unit(db, y));
        for (int z = 0; z < w.size(); ++z)
          if (w(z) != 0) t.push_back({z, w(z)});
      }
  }
  slot = blk;
  return *slot;
}

bool DgaReport::ok() const {
  for (auto& it : items)
    if (!it.ok) return false;
  return true;
}

DgaReport check_dga(const DgAlgebra& D) {
  const Field& F = D.field();
  const auto& C = D.complex();
  DgaReport rep;
  for (int n = D.lo() - 1; n < D.hi(); ++n) {
    Mat dd = F.mul(C.d_sparse(n + 1), C.d(n));
    rep.items.push_back({"d∘d = 0", n, (dd.array() == 0).all()});
  }
  // Sparse columns of d_n, as (row, coeff) lists.
  auto dcols = [&](int n) {
    std::vector<std::vector<std::pair<int, Int>>> cols(C.dim(n));
    const SpMat& S = C.d_sparse(n);
    for (int r = 0; r < S.outerSize(); ++r)
      for (SpMat::InnerIterator it(S, r); it; ++it) cols[it.col()].push_back({r, it.value()});
    return cols;
  };
  using Acc = std::map<int, Int>;
  auto add_prod = [&](Acc& acc, const ProductBlock& blk, int db, int x, int y, Int c) {
    for (auto [z, v] : blk.terms[static_cast<std::size_t>(x) * db + y]) acc[z] += c * v;
  };
  auto clean = [&](Acc& acc) {
    for (auto it = acc.begin(); it != acc.end();) {
      it->second = F.reduce(it->second);
      it = it->second == 0 ? acc.erase(it) : std::next(it);
    }
  };
  for (int a = D.lo(); a <= D.hi(); ++a)
    for (int b = D.lo(); a + b <= D.hi(); ++b) {
      const int da = D.dim(a), db = D.dim(b);
      const auto& ab = D.block(a, b);
      const auto& a1b = D.block(a + 1, b);
      const auto& ab1 = D.block(a, b + 1);
      auto dA = dcols(a), dB = dcols(b), dAB = dcols(a + b);
      bool ok = true;
      for (int x = 0; x < da && ok; ++x)
        for (int y = 0; y < db && ok; ++y) {
          Acc lhs, rhs;
          for (auto [z, v] : ab.terms[static_cast<std::size_t>(x) * db + y])
            for (auto [r, w] : dAB[z]) lhs[r] += v * w;
          for (auto [x2, w] : dA[x]) add_prod(rhs, a1b, db, x2, y, w);
          for (auto [y2, w] : dB[y]) add_prod(rhs, ab1, D.dim(b + 1), x, y2, F.sign(a) * w);
          clean(lhs);
          clean(rhs);
          ok = lhs == rhs;
        }
      rep.items.push_back({"Leibniz", a * 100 + b, ok});
      for (int c = D.lo(); a + b + c <= D.hi(); ++c) {
        const int dc = D.dim(c);
        const auto& ab_c = D.block(a + b, c);
        const auto& bc = D.block(b, c);
        const auto& a_bc = D.block(a, b + c);
        const int dbc = D.dim(b + c);
        bool assoc = true;
        for (int x = 0; x < da && assoc; ++x)
          for (int y = 0; y < db && assoc; ++y)
            for (int z = 0; z < dc && assoc; ++z) {
              Acc l, r;
              for (auto [u, v] : ab.terms[static_cast<std::size_t>(x) * db + y]) add_prod(l, ab_c, dc, u, z, v);
              for (auto [u, v] : bc.terms[static_cast<std::size_t>(y) * dc + z]) add_prod(r, a_bc, dbc, x, u, v);
              clean(l);
              clean(r);
              assoc = l == r;
            }
        rep.items.push_back({"associativity", (a * 10 + b) * 10 + c, assoc});
      }
    }
  return rep;
}

std::vector<int> HochschildComplex::word(int n, int index) const {
  std::vector<int> w(n);
  for (int k = n - 1; k >= 0; --k) {
    w[k] = index % m;
    index /= m;
  }
  return w;
}

int HochschildComplex::index(const std::vector<int>& w) const {
  int x = 0;
  for (int c : w) x = x * m + c;
  return x;
}

namespace {

Int ipow(Int b, int e) {
  Int r = 1;
  while (e-- > 0) r *= b;
  return r;
}

// (dφ)(a_1..a_{n+1}) = Σ_{i=1}^{n} (-1)^i φ(a_1, .., a_i a_{i+1}, .., a_{n+1}).
Mat hochschild_differential(const AugmentedAlgebra& A, int n) {
  const Field& F = A.field();
  const int m = A.abar_dim();
  const Int rows = ipow(m, n + 1), cols = ipow(m, n);
  Mat d = Mat::Zero(rows, cols);
  if (n == 0 || m == 0) return d;
  HochschildComplex hc{nullptr, 0, m};
  for (Int r = 0; r < rows; ++r) {
    auto w = hc.word(n + 1, static_cast<int>(r));
    for (int i = 0; i < n; ++i) {
      const Vec& prod = A.prod(w[i] + 1, w[i + 1] + 1);
      // u = w with the pair (i, i+1) replaced by z.
      Int left = 0, right = 0;
      for (int k = 0; k < i; ++k) left = left * m + w[k];
      for (int k = i + 2; k <= n; ++k) right = right * m + w[k];
      const Int rpow = ipow(m, n - i - 1);
      const Int s = F.sign(i + 1);
      for (int z = 1; z < prod.size(); ++z) {
        if (prod(z) == 0) continue;
        const Int col = (left * m + (z - 1)) * rpow + right;
        d(r, col) = F.reduce(d(r, col) + s * prod(z));
      }
    }
  }
  return d;
}

}  // namespace

DgAlgebra hochschild_dga(const AugmentedAlgebra& A, int D, bool reduced) {
  if (D < 1) throw InputError("hochschild: degree cap must be >= 1");
  const Field& F = A.field();
  const int m = A.abar_dim();
  const int lo = reduced ? 1 : 0;
  std::vector<int> dims;
  std::vector<Mat> d;
  dims.push_back(reduced ? 1 : 0);
  d.push_back(Mat::Zero(reduced ? m : 1, reduced ? 1 : 0));
  for (int n = lo; n <= D; ++n) {
    dims.push_back(static_cast<int>(ipow(m, n)));
    d.push_back(hochschild_differential(A, n));
  }
  dims.push_back(static_cast<int>(ipow(m, D + 1)));
  CochainComplex C(F, lo, D, dims, d);
  auto mul = [F](int, const Vec& u, int, const Vec& v) {
    Vec out(u.size() * v.size());
    for (Eigen::Index x = 0; x < u.size(); ++x) out.segment(x * v.size(), v.size()) = F.reduced(u(x) * v);
    return out;
  };
  DgAlgebra out(std::move(C), mul, true);
  out.label = "C(" + (A.label.empty() ? std::string("A") : A.label) + ")" + (reduced ? "+" : "");
  return out;
}

int default_degree_cap(const AugmentedAlgebra& A) {
  const Int m = A.abar_dim();
  int D = std::max(2, A.nilpotency_index() + 1);
  while (D > 2 && ipow(m, D) > 1024) --D;
  return D;
}

Vec ExtAlgebra::product(int a, const Vec& x, int b, const Vec& y) const {
  if (a + b > retract.hi()) return Vec::Zero(0);
  const Field& F = dga.field();
  Vec u = F.mul(retract.i.at(a), x), v = F.mul(retract.i.at(b), y);
  return F.mul(retract.p.at(a + b), dga.mul(a, u, b, v));
}

ExtAlgebra ext_algebra(const AugmentedAlgebra& A, int D, std::uint64_t seed) {
  ExtAlgebra E;
  E.dga = hochschild_dga(A, D, false);
  E.retract = cohomology_with_retract(E.dga.complex(), seed);
  E.dims = E.retract.hdims;
  return E;
}

}  // namespace ainf
