#include "ainf/fuzz.hpp"

#include <algorithm>
#include <atomic>
#include <random>
#include <thread>

namespace ainf {

namespace {

std::uint64_t mix(std::uint64_t seed, std::uint64_t k) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(k), 0x5eedu};
  std::mt19937_64 g(seq);
  return g();
}

// Positive-degree endomorphisms of V, degree k: blocks V^i -> V^{i+k}.
struct EndSpace {
  std::vector<int> vd, voff;
  int vtotal = 0;
  // For degree k: list of (i, offset into the degree-k coordinates).
  std::vector<std::vector<std::pair<int, int>>> blocks;
  std::vector<int> dim;

  explicit EndSpace(std::vector<int> v) : vd(std::move(v)) {
    for (int x : vd) {
      voff.push_back(vtotal);
      vtotal += x;
    }
    const int top = static_cast<int>(vd.size()) - 1;
    blocks.resize(top + 2);
    dim.assign(top + 2, 0);
    for (int k = 1; k <= top + 1; ++k)
      for (int i = 0; i + k <= top; ++i) {
        blocks[k].push_back({i, dim[k]});
        dim[k] += vd[i] * vd[i + k];
      }
  }
  int top() const { return static_cast<int>(vd.size()) - 1; }

  // Coordinates <-> full vtotal × vtotal matrix.
  Mat to_matrix(int k, const Vec& x) const {
    Mat M = Mat::Zero(vtotal, vtotal);
    for (auto [i, off] : blocks[k]) {
      const int r = vd[i + k], c = vd[i];
      for (int a = 0; a < r; ++a)
        for (int b = 0; b < c; ++b) M(voff[i + k] + a, voff[i] + b) = x(off + a * c + b);
    }
    return M;
  }
  Vec from_matrix(int k, const Mat& M) const {
    Vec x = Vec::Zero(dim[k]);
    for (auto [i, off] : blocks[k]) {
      const int r = vd[i + k], c = vd[i];
      for (int a = 0; a < r; ++a)
        for (int b = 0; b < c; ++b) x(off + a * c + b) = M(voff[i + k] + a, voff[i] + b);
    }
    return x;
  }
};

}  // namespace

FuzzCase random_dga(std::uint64_t seed, int max_dim) {
  std::mt19937_64 rng(seed);
  const Int primes[] = {2, 3, 5};
  FuzzCase c;
  c.seed = seed;
  c.p = primes[rng() % 3];
  const Field F(c.p);
  std::uniform_int_distribution<Int> coef(0, c.p - 1);
  for (;;) {
    std::vector<int> vd(4);
    for (auto& x : vd) x = static_cast<int>(rng() % 3);
    EndSpace E(vd);
    if (E.dim[1] + E.dim[2] + E.dim[3] == 0) continue;

    // ∂ of degree +1 with ∂² = 0.
    Mat dV = Mat::Zero(E.vtotal, E.vtotal);
    for (int i = 0; i + 1 <= E.top(); ++i)
      for (int a = 0; a < vd[i + 1]; ++a)
        for (int b = 0; b < vd[i]; ++b) dV(E.voff[i + 1] + a, E.voff[i] + b) = coef(rng);
    for (int i = 0; i + 2 <= E.top() && !(F.mul(dV, dV).array() == 0).all(); ++i) {
      if (rng() % 2) dV.block(E.voff[i + 2], E.voff[i + 1], vd[i + 2], vd[i + 1]).setZero();
      else dV.block(E.voff[i + 1], E.voff[i], vd[i + 1], vd[i]).setZero();
    }
    if (!(F.mul(dV, dV).array() == 0).all()) continue;
    auto dmap = [&](int k, const Mat& phi) -> Mat { return F.reduced(Mat(dV * phi - F.sign(k) * (phi * dV))); };

    // The dg-subalgebra generated by a few random homogeneous elements
    // (all of End^{>=1} when none are drawn).
    const int top = E.top();
    std::vector<RowReducer> span;
    for (int k = 0; k <= top + 1; ++k) span.emplace_back(F, std::max(E.dim[std::min(k, top + 1)], 1));
    std::vector<std::vector<Mat>> basis(top + 2);
    std::vector<std::pair<int, Mat>> queue;
    const int gens = static_cast<int>(rng() % 4);
    for (int t = 0; t < gens; ++t) {
      const int k = 1 + static_cast<int>(rng() % 3);
      if (k > top || E.dim[k] == 0) continue;
      Vec x(E.dim[k]);
      for (auto& v : x) v = coef(rng);
      queue.push_back({k, E.to_matrix(k, x)});
    }
    if (gens == 0)
      for (int k = 1; k <= top; ++k)
        for (int j = 0; j < E.dim[k]; ++j) queue.push_back({k, E.to_matrix(k, Vec::Unit(E.dim[k], j))});
    int total = 0;
    while (!queue.empty() && total <= max_dim) {
      auto [k, M] = queue.back();
      queue.pop_back();
      if (k > top || E.dim[k] == 0) continue;
      Vec x = E.from_matrix(k, M);
      if (!span[k].insert(x)) continue;
      basis[k].push_back(M);
      ++total;
      queue.push_back({k + 1, dmap(k, M)});
      for (int j = 1; j <= top; ++j)
        for (auto& B : basis[j]) {
          queue.push_back({k + j, F.mul(M, B)});
          queue.push_back({k + j, F.mul(B, M)});
        }
    }
    if (total == 0 || total > max_dim) continue;
    int hi = 0;
    for (int k = 1; k <= top; ++k)
      if (!basis[k].empty()) hi = k;

    // Coordinates on the chosen basis.
    std::vector<Mat> Bm(hi + 2);
    for (int k = 1; k <= hi + 1; ++k) {
      Bm[k] = Mat::Zero(k <= top ? E.dim[k] : 0, k <= hi ? basis[k].size() : 0);
      if (k <= hi)
        for (std::size_t j = 0; j < basis[k].size(); ++j) Bm[k].col(j) = E.from_matrix(k, basis[k][j]);
    }
    auto coords = [Bm, F](int k, const Vec& x) -> Vec {
      if (Bm[k].cols() == 0) return Vec::Zero(0);
      auto s = solve(F, Bm[k], x);
      if (!s) throw GateFailure("fuzz: sub-dga not closed");
      return *s;
    };
    std::vector<int> dims{0};
    std::vector<Mat> d{Mat::Zero(static_cast<int>(basis[1].size()), 0)};
    for (int k = 1; k <= hi; ++k) {
      dims.push_back(static_cast<int>(basis[k].size()));
      const int next = k + 1 <= hi ? static_cast<int>(basis[k + 1].size()) : 0;
      Mat M = Mat::Zero(next, basis[k].size());
      for (std::size_t j = 0; j < basis[k].size(); ++j) {
        Mat dphi = dmap(k, basis[k][j]);
        if (next) M.col(j) = coords(k + 1, E.from_matrix(k + 1, dphi));
      }
      d.push_back(M);
    }
    dims.push_back(0);
    CochainComplex C(F, 1, hi, dims, d);
    auto Ep = std::make_shared<EndSpace>(E);
    auto bas = std::make_shared<std::vector<std::vector<Mat>>>(basis);
    DgAlgebra::Mul mul = [Ep, bas, coords, F, hi](int a, const Vec& u, int b, const Vec& v) -> Vec {
      if (a + b > hi) return Vec::Zero(0);
      Mat U = Mat::Zero(Ep->vtotal, Ep->vtotal), V = U;
      for (int j = 0; j < u.size(); ++j) U += u(j) * (*bas)[a][j];
      for (int j = 0; j < v.size(); ++j) V += v(j) * (*bas)[b][j];
      return coords(a + b, Ep->from_matrix(a + b, F.mul(U, V)));
    };
    c.vdims = vd;
    c.dga = DgAlgebra(std::move(C), mul);
    c.dga.label = "End(V)";
    return c;
  }
}

FuzzResult run_case(const FuzzCase& c, int N) {
  FuzzResult r;
  r.seed = c.seed;
  r.p = c.p;
  r.vdims = c.vdims;
  for (int n = c.dga.lo(); n <= c.dga.hi(); ++n) r.dims.push_back(c.dga.dim(n));
  r.dga_ok = check_dga(c.dga).ok();
  auto ret = cohomology_with_retract(c.dga.complex(), c.seed);
  r.hdims = ret.hdims;
  r.retract_ok = check_retract(ret).ok();
  auto mm = minimal_model(c.dga, ret, std::max(N, 2));
  r.transfer = check_transfer(mm, N, N);
  return r;
}

int FuzzReport::violations() const {
  int v = 0;
  for (auto& c : cases) v += !c.ok();
  return v;
}

FuzzReport fuzz(std::uint64_t seed, int count, int N, int threads) {
  if (count < 0) throw InputError("fuzz: negative case count");
  FuzzReport rep;
  rep.cases.resize(count);
  std::atomic<int> next{0};
  auto worker = [&] {
    for (int k; (k = next++) < count;) rep.cases[k] = run_case(random_dga(mix(seed, k)), N);
  };
  std::vector<std::thread> pool;
  for (int t = 1; t < std::clamp(threads, 1, std::max(count, 1)); ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return rep;
}

}  // namespace ainf
