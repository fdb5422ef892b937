#include "ainf/transfer.hpp"

#include <numeric>

namespace ainf {

namespace {

using RMat = Eigen::Matrix<Int, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

int degree_sum(const std::vector<int>& v) { return std::accumulate(v.begin(), v.end(), 0); }
bool is_zero(const Vec& v) { return v.size() == 0 || (v.array() == 0).all(); }

// Everything the transferred operations need, shared by the closures.
struct State {
  std::shared_ptr<const DgAlgebra> D;
  std::shared_ptr<const HomotopyRetract> r;
  Field F;
  int lo = 1, hi = 0;
  std::map<int, SpMat> h, ip, d, p;

  std::mutex mu;
  std::map<Word, Vec> theta, lambda;

  int hdim(int n) const { return r->hdim(n); }
  int cdim(int n) const { return D->dim(n); }

  const Vec* find(std::map<Word, Vec>& memo, const Word& w) {
    std::lock_guard<std::mutex> lock(mu);
    auto it = memo.find(w);
    return it == memo.end() ? nullptr : &it->second;
  }
  const Vec& store(std::map<Word, Vec>& memo, const Word& w, Vec v) {
    std::lock_guard<std::mutex> lock(mu);
    return memo.emplace(w, std::move(v)).first->second;
  }

  static int sum(const Word& w) {
    int s = 0;
    for (auto& l : w) s += l.deg;
    return s;
  }

  // Λ_n on a basis word of H, in C^{Σ+2-n} (may be hi+1); empty when zero.
  const Vec& Lambda(const Word& w) {
    if (auto v = find(lambda, w)) return *v;
    const int n = static_cast<int>(w.size());
    const int dl = sum(w) + 2 - n;
    Vec acc;
    if (dl <= hi + 1) {
      for (int s = 1; s < n; ++s) {
        Word a(w.begin(), w.begin() + s), b(w.begin() + s, w.end());
        const Vec& u = Theta(a);
        if (is_zero(u)) continue;
        const Vec& v = Theta(b);
        if (is_zero(v)) continue;
        const int du = sum(a) + 1 - s, dv = sum(b) + 1 - (n - s);
        Vec prod = D->mul(du, u, dv, v);
        if (prod.size() == 0) continue;
        if ((du - 1) & 1) prod = -prod;
        acc = acc.size() == 0 ? prod : Vec(acc + prod);
      }
      if (acc.size() != 0) acc = F.reduced(acc);
      if (is_zero(acc)) acc = Vec();
    }
    return store(lambda, w, std::move(acc));
  }

  // Θ_n = f_n on a basis word, in C^{Σ+1-n}; empty when zero.
  const Vec& Theta(const Word& w) {
    if (auto v = find(theta, w)) return *v;
    Vec out;
    if (w.size() == 1) {
      out = r->i.at(w[0].deg).col(w[0].idx);
    } else {
      const Vec& L = Lambda(w);
      const int dl = sum(w) + 2 - static_cast<int>(w.size());
      if (L.size() != 0 && dl - 1 <= hi) out = F.reduced(Vec(-(h.at(dl) * L)));
    }
    if (is_zero(out)) out = Vec();
    return store(theta, w, std::move(out));
  }

  // g_n on homogeneous vectors of C, by g_n = -g_{n-1} ∘ δ ∘ H.
  Vec g_eval(const std::vector<int>& degs, const std::vector<Vec>& xs) {
    const int n = static_cast<int>(degs.size());
    const int out = degree_sum(degs) + 1 - n;
    if (out < lo || out > hi || hdim(out) == 0) return Vec();
    if (n == 1) return F.mul(p.at(degs[0]), xs[0]);
    Vec acc = Vec::Zero(hdim(out));
    std::vector<Vec> ipx(n);
    for (int k = 0; k < n; ++k) {
      if (degs[k] - 1 < lo) continue;
      Vec hk = F.mul(h.at(degs[k]), xs[k]);
      if (is_zero(hk)) continue;
      std::vector<int> d2 = degs;
      d2[k] -= 1;
      std::vector<Vec> y(n);
      bool dead = false;
      for (int s = 0; s < n && !dead; ++s) {
        if (s < k) {
          y[s] = xs[s];
        } else if (s == k) {
          y[s] = hk;
        } else {
          if (ipx[s].size() == 0) ipx[s] = F.mul(ip.at(degs[s]), xs[s]);
          y[s] = ipx[s];
          dead = is_zero(y[s]);
        }
      }
      if (dead) continue;
      int eh = 0;
      for (int s = 0; s < k; ++s) eh += degs[s] - 1;
      int ed = 0;
      for (int j = 0; j + 1 < n; ++j) {
        const int a = d2[j], b = d2[j + 1];
        const int sign = ed + (a - 1);
        ed += a - 1;
        if (a + b > hi) continue;
        Vec merged = D->mul(a, y[j], b, y[j + 1]);
        if (is_zero(merged)) continue;
        std::vector<int> d3;
        std::vector<Vec> z;
        for (int s = 0; s < n; ++s) {
          if (s == j + 1) continue;
          d3.push_back(s == j ? a + b : d2[s]);
          z.push_back(s == j ? merged : y[s]);
        }
        Vec v = g_eval(d3, z);
        if (v.size() == 0) continue;
        acc += F.sign(1 + eh + sign) * v;
      }
    }
    return F.reduced(acc);
  }
};

// ---------------------------------------------------------------- dense functionals

// A linear functional family on ⊗_s C^{Q_s}: `rows` outputs, columns
// enumerate basis tuples with the first slot most significant.
struct Functional {
  int rows = 0;
  std::vector<int> dims;
  std::vector<Int> data;
  bool zero = true;

  std::size_t cols() const {
    std::size_t c = 1;
    for (int d : dims) c *= static_cast<std::size_t>(d);
    return c;
  }
  static Functional zeros(int rows, std::vector<int> dims) {
    Functional f;
    f.rows = rows;
    f.dims = std::move(dims);
    constexpr std::size_t kGuard = std::size_t{1} << 28;
    const std::size_t n = static_cast<std::size_t>(rows) * f.cols();
    if (n > kGuard) throw InputError("transfer: dense functional too large (" + std::to_string(n) + " entries)");
    f.data.assign(n, 0);
    return f;
  }
};

// Composes slot s with M : (new space) -> (old slot space), M of shape old × new.
Functional slot_op(const Field& F, const Functional& in, int s, const SpMat& M) {
  std::vector<int> nd = in.dims;
  nd[s] = static_cast<int>(M.cols());
  Functional out = Functional::zeros(in.rows, nd);
  if (in.zero) return out;
  std::size_t L = 1, R = 1;
  for (int k = 0; k < s; ++k) L *= in.dims[k];
  for (std::size_t k = s + 1; k < in.dims.size(); ++k) R *= in.dims[k];
  const int c_old = in.dims[s], c_new = nd[s];
  const SpMat Mt = SpMat(M.transpose());
  for (std::size_t b = 0; b < static_cast<std::size_t>(in.rows) * L; ++b) {
    Eigen::Map<const RMat> src(in.data.data() + b * c_old * R, c_old, R);
    Eigen::Map<RMat> dst(out.data.data() + b * c_new * R, c_new, R);
    dst.noalias() = Mt * src;
  }
  bool any = false;
  for (auto& x : out.data) {
    x = F.reduce(x);
    any = any || x != 0;
  }
  out.zero = !any;
  return out;
}

void add_into(const Field& F, Functional& acc, const Functional& t, int sign_parity) {
  if (t.zero) return;
  const Int s = F.sign(sign_parity);
  for (std::size_t k = 0; k < acc.data.size(); ++k) acc.data[k] = F.reduce(acc.data[k] + s * t.data[k]);
  acc.zero = false;
}

void refresh_zero(Functional& f) {
  f.zero = std::all_of(f.data.begin(), f.data.end(), [](Int x) { return x == 0; });
}

SpMat reduced(const Field& F, SpMat M) {
  for (int k = 0; k < M.outerSize(); ++k)
    for (SpMat::InnerIterator it(M, k); it; ++it) it.valueRef() = F.reduce(it.value());
  M.prune(Int{0});
  return M;
}

class DenseG {
 public:
  explicit DenseG(State& st) : S(st) {}

  const Functional& G(int n, const std::vector<int>& P) {
    auto key = std::make_pair(n, P);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    Functional f;
    if (n == 1) {
      const int o = P[0];
      f = Functional::zeros(S.hdim(o), {S.cdim(o)});
      Mat pm = Mat(S.p.at(o));
      for (int r = 0; r < pm.rows(); ++r)
        for (int c = 0; c < pm.cols(); ++c) f.data[static_cast<std::size_t>(r) * pm.cols() + c] = pm(r, c);
      refresh_zero(f);
    } else {
      f = apply(n, P, std::vector<const SpMat*>(n, nullptr));
    }
    return memo_.emplace(key, std::move(f)).first->second;
  }

  // G_n|_Q ∘ (pre_0 ⊗ .. ⊗ pre_{n-1}); nullptr means identity.
  Functional apply(int n, const std::vector<int>& Q, const std::vector<const SpMat*>& pre) {
    const int o = degree_sum(Q) + 1 - n;
    std::vector<int> dims;
    for (int s = 0; s < n; ++s) dims.push_back(pre[s] ? static_cast<int>(pre[s]->cols()) : S.cdim(Q[s]));
    const int rows = S.hdim(o);
    Functional acc = Functional::zeros(rows, dims);
    if (rows == 0) return acc;
    if (n == 1) {
      Functional base = G(1, Q);
      return pre[0] ? slot_op(S.F, base, 0, *pre[0]) : base;
    }
    for (int k = 0; k < n; ++k) {
      if (Q[k] - 1 < S.lo) continue;
      std::vector<int> Q1 = Q;
      Q1[k] -= 1;
      std::vector<int> d1;
      for (int q : Q1) d1.push_back(S.cdim(q));
      Functional sum = Functional::zeros(rows, d1);
      int ed = 0;
      for (int j = 0; j + 1 < n; ++j) {
        const int a = Q1[j], b = Q1[j + 1];
        const int sign = ed + (a - 1);
        ed += a - 1;
        if (a + b > S.hi) continue;
        std::vector<int> Q2;
        for (int s = 0; s < n; ++s) {
          if (s == j + 1) continue;
          Q2.push_back(s == j ? a + b : Q1[s]);
        }
        const Functional& g = G(n - 1, Q2);
        if (g.zero) continue;
        add_into(S.F, sum, split(g, j, a, b), sign);
      }
      if (sum.zero) continue;
      int eh = 0;
      for (int s = 0; s < k; ++s) eh += Q[s] - 1;
      for (int s = 0; s < n; ++s) {
        SpMat M;
        if (s < k) {
          if (!pre[s]) continue;
          M = *pre[s];
        } else if (s == k) {
          M = pre[s] ? SpMat(S.h.at(Q[s]) * *pre[s]) : S.h.at(Q[s]);
        } else {
          M = pre[s] ? SpMat(S.ip.at(Q[s]) * *pre[s]) : S.ip.at(Q[s]);
        }
        M = reduced(S.F, std::move(M));
        sum = slot_op(S.F, sum, s, M);
        if (sum.zero) break;
      }
      add_into(S.F, acc, sum, 1 + eh);
    }
    return acc;
  }

  // Pull back through b_2's product C^a ⊗ C^b -> C^{a+b} at slot j.
  Functional split(const Functional& g, int j, int a, int b) {
    const ProductBlock& blk = S.D->block(a, b);
    const int da = S.cdim(a), db = S.cdim(b);
    Functional out;
    if (blk.kronecker) {
      out = g;
    } else {
      SpMat T(S.cdim(a + b), da * db);
      std::vector<Eigen::Triplet<Int>> trip;
      for (int x = 0; x < da * db; ++x)
        for (auto [z, c] : blk.terms[x]) trip.emplace_back(z, x, c);
      T.setFromTriplets(trip.begin(), trip.end());
      out = slot_op(S.F, g, j, T);
    }
    out.dims[j] = da;
    out.dims.insert(out.dims.begin() + j + 1, db);
    return out;
  }

 private:
  State& S;
  std::map<std::pair<int, std::vector<int>>, Functional> memo_;
};

std::vector<std::vector<int>> compositions(int n) {
  std::vector<std::vector<int>> out;
  for (int mask = 0; mask < (1 << (n - 1)); ++mask) {
    std::vector<int> parts;
    int len = 1;
    for (int k = 0; k < n - 1; ++k) {
      if (mask & (1 << k)) {
        parts.push_back(len);
        len = 1;
      } else {
        ++len;
      }
    }
    parts.push_back(len);
    out.push_back(parts);
  }
  return out;
}

}  // namespace

MinimalModelStructure minimal_model(const DgAlgebra& D, const HomotopyRetract& r, int cap) {
  if (D.lo() < 1) throw InputError("transfer: the dg-algebra must live in degrees >= 1");
  if (r.lo() != D.lo() || r.hi() != D.hi()) throw InputError("transfer: retract and dg-algebra degrees differ");
  if (cap < 2) throw InputError("transfer: arity cap must be >= 2");
  auto st = std::make_shared<State>();
  st->D = std::make_shared<DgAlgebra>(D);
  st->r = std::make_shared<HomotopyRetract>(r);
  st->F = D.field();
  st->lo = D.lo();
  st->hi = D.hi();
  const Field& F = st->F;
  if ((r.h.at(D.lo()).array() != 0).any()) throw GateFailure("transfer: h must vanish on the lowest degree");
  for (int n = D.lo(); n <= D.hi() + 1; ++n) st->h[n] = sparse(r.h.at(n));
  for (int n = D.lo(); n <= D.hi(); ++n) {
    st->ip[n] = sparse(F.mul(r.i.at(n), r.p.at(n)));
    st->p[n] = sparse(r.p.at(n));
    st->d[n] = D.complex().d_sparse(n);
  }

  MinimalModelStructure mm;
  mm.dga = st->D;
  mm.retract = st->r;
  mm.cap = cap;
  auto source = std::make_shared<AInfAlgebra>(from_dga(D, cap));
  mm.source = source;

  GradedDims hg{D.lo(), D.hi(), r.hdims};
  Multilinear b = [st](const std::vector<int>& degs, const Args& args) -> Vec {
    const int n = static_cast<int>(degs.size());
    const int out = degree_sum(degs) + 2 - n;
    return expand_multilinear(st->F, st->hdim(out), degs, args,
                              [&](const std::vector<int>& dg, const std::vector<int>& idx) -> Vec {
                                Word w;
                                for (std::size_t k = 0; k < dg.size(); ++k) w.push_back({dg[k], idx[k]});
                                const Vec& L = st->Lambda(w);
                                if (L.size() == 0) return Vec();
                                return st->F.mul(st->p.at(out), L);
                              });
  };
  std::vector<bool> van(cap + 1, false);
  van[0] = van[1] = true;
  auto model = std::make_shared<AInfAlgebra>(F, hg, cap, b, van);
  model->label = "H(" + D.label + ")";
  mm.model = model;
  mm.internals = st;

  Multilinear f = [st](const std::vector<int>& degs, const Args& args) -> Vec {
    const int n = static_cast<int>(degs.size());
    const int out = degree_sum(degs) + 1 - n;
    return expand_multilinear(st->F, st->cdim(out), degs, args,
                              [&](const std::vector<int>& dg, const std::vector<int>& idx) -> Vec {
                                Word w;
                                for (std::size_t k = 0; k < dg.size(); ++k) w.push_back({dg[k], idx[k]});
                                return st->Theta(w);
                              });
  };
  mm.f = AInfMorphism(model, source, cap, f, {true, false});
  mm.f.label = "f";

  Multilinear g = [st](const std::vector<int>& degs, const Args& args) -> Vec {
    std::vector<Vec> xs;
    for (auto* a : args) xs.push_back(*a);
    return st->g_eval(degs, xs);
  };
  // g_n is built from n-1 merges, so it is nonzero for arbitrarily large n
  // in general; the cap only bounds what callers may ask for.
  mm.g = AInfMorphism(source, model, 64, g, {true, false});
  mm.g.label = "g";
  return mm;
}

MinimalModelStructure minimal_model(const DgAlgebra& D, int cap, std::uint64_t seed) {
  return minimal_model(D, cohomology_with_retract(D.complex(), seed), cap);
}

MinimalModelStructure transfer_algebra(const AugmentedAlgebra& A, int D, int cap, std::uint64_t seed) {
  return minimal_model(hochschild_dga(A, D, true), cap, seed);
}

IdentityReport check_left_inverse(const MinimalModelStructure& mm, int N) {
  auto st = std::static_pointer_cast<State>(mm.internals);
  if (!st) throw InputError("check_left_inverse: structure not produced by minimal_model");
  State& S = *st;
  const Field& F = S.F;
  DenseG dense(S);
  const AInfAlgebra& H = *mm.model;
  const GradedDims& cg = mm.source->space();
  IdentityReport rep;
  for (int n = 1; n <= N; ++n) {
    WeightCheck wc;
    wc.weight = n;
    for (auto& P : degree_patterns(cg, n, H.lo() + n - 2, H.hi() + n - 2)) {
      const int o = degree_sum(P) + 2 - n;
      if (H.dim(o) == 0) continue;
      std::vector<int> dims;
      for (int q : P) dims.push_back(S.cdim(q));
      Functional R = Functional::zeros(H.dim(o), dims);
      // g ∘ (1^r ⊗ d ⊗ 1^t)
      int er = 0;
      for (int r = 0; r < n; ++r) {
        const int a = P[r];
        const int sign = er;
        er += a - 1;
        if (a + 1 > S.hi) continue;
        std::vector<int> Q = P;
        Q[r] = a + 1;
        std::vector<const SpMat*> pre(n, nullptr);
        pre[r] = &S.d.at(a);
        add_into(F, R, dense.apply(n, Q, pre), sign);
      }
      // g ∘ (1^r ⊗ b_2 ⊗ 1^t)
      er = 0;
      for (int r = 0; r + 1 < n; ++r) {
        const int a = P[r], b = P[r + 1];
        const int sign = er + (a - 1);
        er += a - 1;
        if (a + b > S.hi) continue;
        std::vector<int> Q;
        for (int s = 0; s < n; ++s) {
          if (s == r + 1) continue;
          Q.push_back(s == r ? a + b : P[s]);
        }
        const Functional& g = dense.G(n - 1, Q);
        if (!g.zero) add_into(F, R, dense.split(g, r, a, b), sign);
      }
      // - Σ b^H_q(g_{i_1} ⊗ .. ⊗ g_{i_q}), q >= 2 (b^H_1 = 0).
      for (auto& parts : compositions(n)) {
        const int q = static_cast<int>(parts.size());
        if (q < 2 || H.vanishes(q)) continue;
        std::vector<const Functional*> gs;
        std::vector<int> hdeg;
        int start = 0;
        bool dead = false;
        for (int len : parts) {
          std::vector<int> sub(P.begin() + start, P.begin() + start + len);
          const int od = degree_sum(sub) + 1 - len;
          start += len;
          if (od < H.lo() || od > H.hi() || H.dim(od) == 0) {
            dead = true;
            break;
          }
          const Functional& g = dense.G(len, sub);
          if (g.zero) {
            dead = true;
            break;
          }
          gs.push_back(&g);
          hdeg.push_back(od);
        }
        if (dead) continue;
        std::vector<int> hd;
        for (int x : hdeg) hd.push_back(H.dim(x));
        // Walk the H-words; for each nonzero b^H value add the Kronecker
        // product of the corresponding functional rows.
        std::vector<int> w(q, 0);
        const std::size_t total_cols = R.cols();
        std::vector<Int> kron;
        for (;;) {
          Vec bv = H.b_basis(hdeg, w);
          if (!is_zero(bv)) {
            kron.assign(1, 1);
            for (int t = 0; t < q && !kron.empty(); ++t) {
              const std::size_t c = gs[t]->cols();
              const Int* row = gs[t]->data.data() + static_cast<std::size_t>(w[t]) * c;
              std::vector<Int> next(kron.size() * c);
              for (std::size_t x = 0; x < kron.size(); ++x)
                if (kron[x])
                  for (std::size_t y = 0; y < c; ++y) next[x * c + y] = F.fmod(kron[x] * row[y]);
              kron.swap(next);
            }
            for (int beta = 0; beta < bv.size(); ++beta) {
              if (bv(beta) == 0) continue;
              const Int c = F.neg(bv(beta));
              Int* dst = R.data.data() + static_cast<std::size_t>(beta) * total_cols;
              for (std::size_t x = 0; x < total_cols; ++x)
                if (kron[x]) dst[x] = F.fmod(dst[x] + c * kron[x]);
            }
            R.zero = false;
          }
          int k = q - 1;
          while (k >= 0 && ++w[k] == hd[k]) w[k--] = 0;
          if (k < 0) break;
        }
      }
      const std::size_t cols = R.cols();
      wc.checked += static_cast<long long>(cols);
      long long bad = 0;
      for (std::size_t c = 0; c < cols; ++c)
        for (int beta = 0; beta < R.rows; ++beta)
          if (R.data[static_cast<std::size_t>(beta) * cols + c] != 0) {
            ++bad;
            break;
          }
      if (bad && rep.first_failure.empty()) rep.first_failure = "weight " + std::to_string(n);
      wc.failures += bad;
    }
    rep.weights.push_back(wc);
  }
  return rep;
}

TransferReport check_transfer(const MinimalModelStructure& mm, int N, int N_g) {
  TransferReport rep;
  const AInfAlgebra& H = *mm.model;
  const Field& F = mm.field();
  rep.structure = check_structure(H, N);
  rep.f_check = check_morphism(mm.f, N);
  rep.g_check = check_left_inverse(mm, N_g);
  rep.f1_is_i = rep.g1_is_p = true;
  for (int n = H.lo(); n <= H.hi(); ++n) {
    rep.f1_is_i = rep.f1_is_i && mm.f.linear(n) == mm.retract->i.at(n);
    rep.g1_is_p = rep.g1_is_p && mm.g.linear(n) == mm.retract->p.at(n);
  }
  rep.g_after_f_is_identity = is_identity(compose(mm.g, mm.f), N_g);
  rep.m2_is_cup = true;
  for (int a = H.lo(); a <= H.hi(); ++a)
    for (int b = H.lo(); a + b <= H.hi(); ++b)
      for (int x = 0; x < H.dim(a); ++x)
        for (int y = 0; y < H.dim(b); ++y) {
          Vec ex = Vec::Unit(H.dim(a), x), ey = Vec::Unit(H.dim(b), y);
          Vec m2 = H.m({a, b}, {&ex, &ey});
          Vec cup = F.mul(mm.retract->p.at(a + b),
                          mm.dga->mul(a, mm.retract->i.at(a).col(x), b, mm.retract->i.at(b).col(y)));
          if (m2.size() == 0) m2 = Vec::Zero(cup.size());
          rep.m2_is_cup = rep.m2_is_cup && m2 == cup;
        }
  return rep;
}

std::map<Word, Vec> nonzero_products(const AInfAlgebra& A, int N) {
  std::map<Word, Vec> out;
  for (int n = 2; n <= N; ++n) {
    if (A.vanishes(n)) continue;
    for (auto& pat : degree_patterns(A.space(), n, A.lo() + n - 2, A.hi() + n - 2)) {
      std::vector<int> idx(n, 0);
      for (;;) {
        std::vector<Vec> units;
        for (int k = 0; k < n; ++k) units.push_back(Vec::Unit(A.dim(pat[k]), idx[k]));
        Args args;
        for (auto& u : units) args.push_back(&u);
        Vec v = A.m(pat, args);
        if (!is_zero(v)) {
          Word w;
          for (int k = 0; k < n; ++k) w.push_back({pat[k], idx[k]});
          out[w] = v;
        }
        int k = n - 1;
        while (k >= 0 && ++idx[k] == A.dim(pat[k])) idx[k--] = 0;
        if (k < 0) break;
      }
    }
  }
  return out;
}

}  // namespace ainf
