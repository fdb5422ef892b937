#include "ainf/ainfty.hpp"

#include <map>
#include <numeric>
#include <sstream>

namespace ainf {

int GradedDims::total() const { return std::accumulate(dims.begin(), dims.end(), 0); }

int GradedDims::offset(int n) const {
  int o = 0;
  for (int k = lo; k < n && k <= hi; ++k) o += dim(k);
  return o;
}

std::vector<std::vector<int>> degree_patterns(const GradedDims& g, int n, int sum_lo, int sum_hi) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int sum) {
    const int left = n - static_cast<int>(cur.size());
    if (left == 0) {
      if (sum >= sum_lo && sum <= sum_hi) out.push_back(cur);
      return;
    }
    for (int d = g.lo; d <= g.hi; ++d) {
      if (g.dim(d) == 0) continue;
      // Remaining letters contribute at least lo each.
      if (sum + d + (left - 1) * g.lo > sum_hi) break;
      cur.push_back(d);
      rec(sum + d);
      cur.pop_back();
    }
  };
  if (n > 0) rec(0);
  return out;
}

int bar_sign_parity(const std::vector<int>& degs) {
  const int n = static_cast<int>(degs.size());
  int s = 0;
  for (int k = 0; k < n; ++k) s += (n - 1 - k) * (degs[k] - 1);
  return s & 1;
}

namespace {

int degree_sum(const std::vector<int>& degs) { return std::accumulate(degs.begin(), degs.end(), 0); }

// Iterates over all basis index tuples for a degree pattern.
template <typename Fn>
void for_each_index(const std::vector<int>& dims, Fn&& fn) {
  const int n = static_cast<int>(dims.size());
  for (int d : dims)
    if (d == 0) return;
  std::vector<int> idx(n, 0);
  for (;;) {
    fn(idx);
    int k = n - 1;
    while (k >= 0 && ++idx[k] == dims[k]) idx[k--] = 0;
    if (k < 0) return;
  }
}

bool is_zero(const Vec& v) { return v.size() == 0 || (v.array() == 0).all(); }

std::string describe(const std::vector<int>& degs, const std::vector<int>& idx) {
  std::ostringstream os;
  os << "(";
  for (std::size_t k = 0; k < degs.size(); ++k) os << (k ? "," : "") << degs[k] << ":" << idx[k];
  os << ")";
  return os.str();
}

// Unit vectors per degree, shared by the checks.
struct Units {
  std::map<int, std::vector<Vec>> by_deg;
  const GradedDims& g;
  explicit Units(const GradedDims& gd) : g(gd) {
    for (int d = g.lo; d <= g.hi; ++d)
      for (int k = 0; k < g.dim(d); ++k) by_deg[d].push_back(Vec::Unit(g.dim(d), k));
  }
  const Vec* at(int d, int k) const { return &by_deg.at(d)[k]; }
};

}  // namespace

Vec expand_multilinear(const Field& F, int out_dim, const std::vector<int>& degs, const Args& args,
                       const std::function<Vec(const std::vector<int>&, const std::vector<int>&)>& on_word) {
  const int n = static_cast<int>(args.size());
  std::vector<std::vector<std::pair<int, Int>>> nz(n);
  for (int k = 0; k < n; ++k) {
    for (int i = 0; i < args[k]->size(); ++i) {
      Int c = F.reduce((*args[k])(i));
      if (c != 0) nz[k].push_back({i, c});
    }
    if (nz[k].empty()) return Vec::Zero(out_dim);
  }
  Vec acc = Vec::Zero(out_dim);
  std::vector<int> idx(n);
  std::function<void(int, Int)> rec = [&](int k, Int coeff) {
    if (k == n) {
      Vec v = on_word(degs, idx);
      if (v.size() != 0) acc = F.reduced(acc + coeff * v);
      return;
    }
    for (auto [i, c] : nz[k]) {
      idx[k] = i;
      rec(k + 1, F.mul(coeff, c));
    }
  };
  rec(0, 1);
  return acc;
}

// ---------------------------------------------------------------- algebras

AInfAlgebra::AInfAlgebra(Field F, GradedDims space, int cap, Multilinear b, std::vector<bool> vanishes)
    : F_(F), space_(std::move(space)), cap_(cap), b_(std::move(b)), vanishes_(std::move(vanishes)) {
  if (static_cast<int>(space_.dims.size()) != space_.hi - space_.lo + 1 && space_.hi >= space_.lo)
    throw InputError("A_inf algebra: dims do not match the degree range");
}

Vec AInfAlgebra::b(const std::vector<int>& degs, const Args& args) const {
  const int n = static_cast<int>(args.size());
  if (n == 0 || vanishes(n)) return Vec();
  for (int d : degs)
    if (d < lo() || d > hi()) return Vec();
  const int out = degree_sum(degs) + 2 - n;
  if (out < lo() || out > hi()) return Vec();
  Vec v = b_(degs, args);
  if (v.size() == 0) return v;
  return F_.reduced(v);
}

Vec AInfAlgebra::b_basis(const std::vector<int>& degs, const std::vector<int>& idx) const {
  std::vector<Vec> units;
  units.reserve(degs.size());
  for (std::size_t k = 0; k < degs.size(); ++k) units.push_back(Vec::Unit(dim(degs[k]), idx[k]));
  Args a;
  for (auto& u : units) a.push_back(&u);
  return b(degs, a);
}

Vec AInfAlgebra::m(const std::vector<int>& degs, const Args& args) const {
  Vec v = b(degs, args);
  if (v.size() == 0 || !bar_sign_parity(degs)) return v;
  return F_.reduced(-v);
}

// ---------------------------------------------------------------- morphisms

AInfMorphism::AInfMorphism(AInfPtr source, AInfPtr target, int cap, Multilinear f, std::vector<bool> vanishes)
    : src_(std::move(source)), tgt_(std::move(target)), cap_(cap), f_(std::move(f)), vanishes_(std::move(vanishes)) {
  if (!(src_->field() == tgt_->field())) throw InputError("morphism: fields differ");
}

Vec AInfMorphism::f(const std::vector<int>& degs, const Args& args) const {
  const int n = static_cast<int>(args.size());
  if (n == 0 || vanishes(n)) return Vec();
  for (int d : degs)
    if (d < src_->lo() || d > src_->hi()) return Vec();
  const int out = degree_sum(degs) + 1 - n;
  if (out < tgt_->lo() || out > tgt_->hi()) return Vec();
  Vec v = f_(degs, args);
  if (v.size() == 0) return v;
  return tgt_->field().reduced(v);
}

Vec AInfMorphism::f_basis(const std::vector<int>& degs, const std::vector<int>& idx) const {
  std::vector<Vec> units;
  for (std::size_t k = 0; k < degs.size(); ++k) units.push_back(Vec::Unit(src_->dim(degs[k]), idx[k]));
  Args a;
  for (auto& u : units) a.push_back(&u);
  return f(degs, a);
}

Mat AInfMorphism::linear(int n) const {
  Mat M = Mat::Zero(tgt_->dim(n), src_->dim(n));
  for (int k = 0; k < src_->dim(n); ++k) {
    Vec v = f_basis({n}, {k});
    if (v.size() != 0) M.col(k) = v;
  }
  return M;
}

// ---------------------------------------------------------------- reports

bool IdentityReport::ok() const {
  for (auto& w : weights)
    if (w.failures) return false;
  return true;
}

long long IdentityReport::checked() const {
  long long c = 0;
  for (auto& w : weights) c += w.checked;
  return c;
}

int IdentityReport::failing_weight() const {
  for (auto& w : weights)
    if (w.failures) return w.weight;
  return 0;
}

IdentityReport check_structure(const AInfAlgebra& A, int N) {
  if (N <= 0) N = A.cap();
  const Field& F = A.field();
  const GradedDims& g = A.space();
  Units units(g);
  IdentityReport rep;
  for (int n = 1; n <= N; ++n) {
    WeightCheck wc;
    wc.weight = n;
    std::vector<std::pair<int, int>> terms;  // (r, s)
    for (int s = 1; s <= n; ++s)
      if (!A.vanishes(s) && !A.vanishes(n - s + 1))
        for (int r = 0; r + s <= n; ++r) terms.push_back({r, s});
    if (terms.empty()) {
      wc.vacuous = true;
      rep.weights.push_back(wc);
      continue;
    }
    for (auto& pat : degree_patterns(g, n, g.lo + n - 3, g.hi + n - 3)) {
      const int out = degree_sum(pat) + 3 - n;
      std::vector<int> dims;
      for (int d : pat) dims.push_back(g.dim(d));
      for_each_index(dims, [&](const std::vector<int>& idx) {
        Vec acc = Vec::Zero(g.dim(out));
        for (auto [r, s] : terms) {
          std::vector<int> idg(pat.begin() + r, pat.begin() + r + s);
          Args ia;
          for (int k = r; k < r + s; ++k) ia.push_back(units.at(pat[k], idx[k]));
          Vec inner = A.b(idg, ia);
          if (is_zero(inner)) continue;
          std::vector<int> odeg;
          Args oa;
          int parity = 0;
          for (int k = 0; k < r; ++k) {
            odeg.push_back(pat[k]);
            oa.push_back(units.at(pat[k], idx[k]));
            parity += pat[k] - 1;
          }
          odeg.push_back(degree_sum(idg) + 2 - s);
          oa.push_back(&inner);
          for (int k = r + s; k < n; ++k) {
            odeg.push_back(pat[k]);
            oa.push_back(units.at(pat[k], idx[k]));
          }
          Vec outer = A.b(odeg, oa);
          if (outer.size() != 0) acc += F.sign(parity) * outer;
        }
        ++wc.checked;
        if (!is_zero(F.reduced(acc))) {
          if (!wc.failures && rep.first_failure.empty())
            rep.first_failure = "weight " + std::to_string(n) + " at " + describe(pat, idx);
          ++wc.failures;
        }
      });
    }
    rep.weights.push_back(wc);
  }
  return rep;
}

namespace {

// All compositions of n into positive parts.
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

IdentityReport check_morphism(const AInfMorphism& f, int N) {
  if (N <= 0) N = std::max(f.cap(), std::max(f.source().cap(), f.target().cap()));
  const AInfAlgebra& A = f.source();
  const AInfAlgebra& B = f.target();
  const Field& F = A.field();
  const GradedDims& g = A.space();
  Units units(g);
  IdentityReport rep;
  for (int n = 1; n <= N; ++n) {
    WeightCheck wc;
    wc.weight = n;
    std::vector<std::pair<int, int>> lhs_terms;
    for (int s = 1; s <= n; ++s)
      if (!A.vanishes(s) && !f.vanishes(n - s + 1))
        for (int r = 0; r + s <= n; ++r) lhs_terms.push_back({r, s});
    std::vector<std::vector<int>> rhs_terms;
    for (auto& parts : compositions(n)) {
      if (B.vanishes(static_cast<int>(parts.size()))) continue;
      bool ok = true;
      for (int i : parts) ok = ok && !f.vanishes(i);
      if (ok) rhs_terms.push_back(parts);
    }
    if (lhs_terms.empty() && rhs_terms.empty()) {
      wc.vacuous = true;
      rep.weights.push_back(wc);
      continue;
    }
    const int sum_lo = B.lo() + n - 2, sum_hi = B.hi() + n - 2;
    for (auto& pat : degree_patterns(g, n, sum_lo, sum_hi)) {
      const int out = degree_sum(pat) + 2 - n;
      std::vector<int> dims;
      for (int d : pat) dims.push_back(g.dim(d));
      for_each_index(dims, [&](const std::vector<int>& idx) {
        Vec acc = Vec::Zero(B.dim(out));
        for (auto [r, s] : lhs_terms) {
          std::vector<int> idg(pat.begin() + r, pat.begin() + r + s);
          Args ia;
          for (int k = r; k < r + s; ++k) ia.push_back(units.at(pat[k], idx[k]));
          Vec inner = A.b(idg, ia);
          if (is_zero(inner)) continue;
          std::vector<int> odeg;
          Args oa;
          int parity = 0;
          for (int k = 0; k < r; ++k) {
            odeg.push_back(pat[k]);
            oa.push_back(units.at(pat[k], idx[k]));
            parity += pat[k] - 1;
          }
          odeg.push_back(degree_sum(idg) + 2 - s);
          oa.push_back(&inner);
          for (int k = r + s; k < n; ++k) {
            odeg.push_back(pat[k]);
            oa.push_back(units.at(pat[k], idx[k]));
          }
          Vec v = f.f(odeg, oa);
          if (v.size() != 0) acc += F.sign(parity) * v;
        }
        // f on consecutive sub-words, memoized for this word.
        std::map<std::pair<int, int>, Vec> piece;
        auto get = [&](int start, int len) -> const Vec& {
          auto key = std::make_pair(start, len);
          auto it = piece.find(key);
          if (it != piece.end()) return it->second;
          std::vector<int> sd(pat.begin() + start, pat.begin() + start + len);
          Args sa;
          for (int k = start; k < start + len; ++k) sa.push_back(units.at(pat[k], idx[k]));
          return piece[key] = f.f(sd, sa);
        };
        for (auto& parts : rhs_terms) {
          std::vector<int> odeg;
          Args oa;
          int start = 0;
          bool zero = false;
          for (int len : parts) {
            const Vec& v = get(start, len);
            if (is_zero(v)) {
              zero = true;
              break;
            }
            int s = 0;
            for (int k = start; k < start + len; ++k) s += pat[k];
            odeg.push_back(s + 1 - len);
            oa.push_back(&v);
            start += len;
          }
          if (zero) continue;
          Vec v = B.b(odeg, oa);
          if (v.size() != 0) acc -= v;
        }
        ++wc.checked;
        if (!is_zero(F.reduced(acc))) {
          if (!wc.failures && rep.first_failure.empty())
            rep.first_failure = "weight " + std::to_string(n) + " at " + describe(pat, idx);
          ++wc.failures;
        }
      });
    }
    rep.weights.push_back(wc);
  }
  return rep;
}

// ---------------------------------------------------------------- constructions

AInfMorphism compose(const AInfMorphism& g, const AInfMorphism& f) {
  if (f.target_ptr() != g.source_ptr() && !(f.target().space() == g.source().space()))
    throw InputError("compose: target of f is not the source of g");
  auto fp = std::make_shared<AInfMorphism>(f);
  auto gp = std::make_shared<AInfMorphism>(g);
  const int cap = std::min(64, f.cap() * g.cap());
  Multilinear h = [fp, gp](const std::vector<int>& degs, const Args& args) -> Vec {
    const int n = static_cast<int>(args.size());
    const Field& F = fp->source().field();
    std::map<std::pair<int, int>, Vec> piece;
    Vec acc;
    for (auto& parts : compositions(n)) {
      if (gp->vanishes(static_cast<int>(parts.size()))) continue;
      std::vector<int> odeg;
      Args oa;
      int start = 0;
      bool zero = false;
      for (int len : parts) {
        if (fp->vanishes(len)) {
          zero = true;
          break;
        }
        auto key = std::make_pair(start, len);
        auto it = piece.find(key);
        if (it == piece.end()) {
          std::vector<int> sd(degs.begin() + start, degs.begin() + start + len);
          Args sa(args.begin() + start, args.begin() + start + len);
          it = piece.emplace(key, fp->f(sd, sa)).first;
        }
        if (is_zero(it->second)) {
          zero = true;
          break;
        }
        int s = 0;
        for (int k = start; k < start + len; ++k) s += degs[k];
        odeg.push_back(s + 1 - len);
        oa.push_back(&it->second);
        start += len;
      }
      if (zero) continue;
      Vec v = gp->f(odeg, oa);
      if (v.size() == 0) continue;
      acc = acc.size() == 0 ? v : Vec(F.reduced(acc + v));
    }
    return acc;
  };
  AInfMorphism out(f.source_ptr(), g.target_ptr(), cap, h, {});
  out.label = g.label + "∘" + f.label;
  return out;
}

AInfMorphism identity_morphism(AInfPtr A) {
  std::vector<bool> van(A->cap() + 1, true);
  van[1] = false;
  Multilinear f = [](const std::vector<int>&, const Args& args) -> Vec { return *args[0]; };
  AInfMorphism out(A, A, 1, f, van);
  out.label = "id";
  return out;
}

AInfMorphism strict_morphism(AInfPtr source, AInfPtr target, const std::vector<Mat>& f1) {
  const int lo = source->lo();
  if (static_cast<int>(f1.size()) != source->hi() - lo + 1) throw InputError("strict morphism: one block per degree");
  for (int n = lo; n <= source->hi(); ++n)
    if (f1[n - lo].cols() != source->dim(n) || f1[n - lo].rows() != target->dim(n))
      throw InputError("strict morphism: block shape mismatch");
  auto blocks = std::make_shared<std::vector<Mat>>(f1);
  Multilinear f = [blocks, lo](const std::vector<int>& degs, const Args& args) -> Vec {
    return (*blocks)[degs[0] - lo] * *args[0];
  };
  AInfMorphism out(source, target, 1, f, {true, false});
  out.label = "strict";
  return out;
}

bool is_identity(const AInfMorphism& f, int N) {
  if (N <= 0) N = std::max(4, f.source().cap());
  const AInfAlgebra& A = f.source();
  const AInfAlgebra& B = f.target();
  if (!(A.space() == B.space())) return false;
  for (int n = A.lo(); n <= A.hi(); ++n)
    if (f.linear(n) != identity(A.dim(n))) return false;
  for (int n = 2; n <= N; ++n) {
    if (f.vanishes(n)) continue;
    for (auto& pat : degree_patterns(A.space(), n, B.lo() + n - 1, B.hi() + n - 1)) {
      std::vector<int> dims;
      for (int d : pat) dims.push_back(A.dim(d));
      bool ok = true;
      for_each_index(dims, [&](const std::vector<int>& idx) {
        if (ok && !is_zero(f.f_basis(pat, idx))) ok = false;
      });
      if (!ok) return false;
    }
  }
  return true;
}

bool is_isomorphism(const AInfMorphism& f) {
  const AInfAlgebra& A = f.source();
  const AInfAlgebra& B = f.target();
  if (!(A.space() == B.space())) return false;
  for (int n = A.lo(); n <= A.hi(); ++n)
    if (rank(A.field(), f.linear(n)) != A.dim(n)) return false;
  return true;
}

bool is_trivial(const AInfAlgebra& A, int N) {
  if (N <= 0) N = A.cap();
  for (int d = A.lo(); d <= A.hi(); ++d)
    for (int k = 0; k < A.dim(d); ++k)
      if (!is_zero(A.b_basis({d}, {k}))) return false;
  for (int n = 3; n <= N; ++n) {
    if (A.vanishes(n)) continue;
    for (auto& pat : degree_patterns(A.space(), n, A.lo() + n - 2, A.hi() + n - 2)) {
      std::vector<int> dims;
      for (int d : pat) dims.push_back(A.dim(d));
      bool zero = true;
      for_each_index(dims, [&](const std::vector<int>& idx) {
        if (zero && !is_zero(A.b_basis(pat, idx))) zero = false;
      });
      if (!zero) return false;
    }
  }
  return true;
}

AInfAlgebra from_dga(const DgAlgebra& D, int cap) {
  GradedDims g;
  g.lo = D.lo();
  g.hi = D.hi();
  for (int n = g.lo; n <= g.hi; ++n) g.dims.push_back(D.dim(n));
  auto dp = std::make_shared<DgAlgebra>(D);
  const Field F = D.field();
  Multilinear b = [dp, F](const std::vector<int>& degs, const Args& args) -> Vec {
    if (args.size() == 1) return F.mul(dp->complex().d_sparse(degs[0]), *args[0]);
    if (args.size() == 2) {
      Vec v = dp->mul(degs[0], *args[0], degs[1], *args[1]);
      return (degs[0] - 1) & 1 ? Vec(F.reduced(-v)) : v;
    }
    return Vec();
  };
  std::vector<bool> van(std::max(cap, 2) + 1, true);
  van[2] = false;
  van[1] = true;
  for (int n = g.lo; n < g.hi; ++n)
    if (D.complex().d_sparse(n).nonZeros() != 0) van[1] = false;
  AInfAlgebra A(F, g, cap, b, van);
  A.label = D.label;
  return A;
}

AInfAlgebra opposite(const AInfAlgebra& A, OppositeSign convention) {
  auto ap = std::make_shared<AInfAlgebra>(A);
  Multilinear b = [ap, convention](const std::vector<int>& degs, const Args& args) -> Vec {
    const int n = static_cast<int>(args.size());
    std::vector<int> rd(degs.rbegin(), degs.rend());
    Args ra(args.rbegin(), args.rend());
    Vec v = ap->b(rd, ra);
    if (v.size() == 0) return v;
    int parity = bar_sign_parity(degs) + bar_sign_parity(rd);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) parity += degs[i] * degs[j];
    if (convention == OppositeSign::Corrected) parity += (n - 1) * (n - 2) / 2;
    return (parity & 1) ? Vec(-v) : v;
  };
  std::vector<bool> van(A.cap() + 1);
  for (int n = 0; n <= A.cap(); ++n) van[n] = A.vanishes(n);
  AInfAlgebra out(A.field(), A.space(), A.cap(), b, van);
  out.label = "op(" + A.label + ")";
  return out;
}

AInfAlgebra tabulated(Field F, GradedDims space, int cap, std::map<Word, Vec> table) {
  std::vector<bool> van(cap + 1, true);
  for (auto& [w, v] : table) {
    if (static_cast<int>(w.size()) > cap) throw InputError("tabulated: word longer than the cap");
    if (!(v.array() == 0).all()) van[w.size()] = false;
  }
  auto tp = std::make_shared<std::map<Word, Vec>>(std::move(table));
  auto gp = std::make_shared<GradedDims>(space);
  Multilinear b = [tp, gp, F](const std::vector<int>& degs, const Args& args) -> Vec {
    int sum = 0;
    for (int d : degs) sum += d;
    const int out = sum + 2 - static_cast<int>(degs.size());
    return expand_multilinear(F, gp->dim(out), degs, args,
                              [&](const std::vector<int>& dg, const std::vector<int>& idx) -> Vec {
                                Word w;
                                for (std::size_t k = 0; k < dg.size(); ++k) w.push_back({dg[k], idx[k]});
                                auto it = tp->find(w);
                                return it == tp->end() ? Vec() : it->second;
                              });
  };
  return AInfAlgebra(F, std::move(space), cap, b, van);
}

AInfAlgebra tabulated_m(Field F, GradedDims space, int cap, const std::map<Word, Vec>& m) {
  std::map<Word, Vec> b;
  for (auto& [w, v] : m) {
    std::vector<int> degs;
    for (auto& l : w) degs.push_back(l.deg);
    b[w] = bar_sign_parity(degs) ? Vec(F.reduced(-v)) : F.reduced(v);
  }
  return tabulated(F, std::move(space), cap, std::move(b));
}

namespace {

int binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return static_cast<int>(r);
}

std::vector<std::vector<int>> subsets(int d, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int start) {
    if (static_cast<int>(cur.size()) == k) {
      out.push_back(cur);
      return;
    }
    for (int i = start; i < d; ++i) {
      cur.push_back(i);
      rec(i + 1);
      cur.pop_back();
    }
  };
  rec(0);
  return out;
}

}  // namespace

std::vector<int> exterior_dims(int d, int degree_cap) {
  std::vector<int> out;
  for (int k = 0; k <= degree_cap; ++k) out.push_back(binom(d, k));
  return out;
}

AInfAlgebra exterior_algebra(int d, Int p, int degree_cap) {
  if (d < 1) throw InputError("exterior algebra: d must be >= 1");
  Field F(p);
  GradedDims g;
  g.lo = 1;
  g.hi = std::max(1, std::min(degree_cap, d));
  std::vector<std::vector<std::vector<int>>> basis(g.hi + 1);
  for (int k = 1; k <= g.hi; ++k) {
    basis[k] = subsets(d, k);
    g.dims.push_back(static_cast<int>(basis[k].size()));
  }
  std::map<Word, Vec> m;
  for (int a = 1; a <= g.hi; ++a)
    for (int b = 1; a + b <= g.hi; ++b)
      for (std::size_t s = 0; s < basis[a].size(); ++s)
        for (std::size_t t = 0; t < basis[b].size(); ++t) {
          const auto& S = basis[a][s];
          const auto& T = basis[b][t];
          std::vector<int> U;
          int inversions = 0;
          bool disjoint = true;
          for (int x : S)
            for (int y : T) {
              if (x == y) disjoint = false;
              if (x > y) ++inversions;
            }
          if (!disjoint) continue;
          U = S;
          U.insert(U.end(), T.begin(), T.end());
          std::sort(U.begin(), U.end());
          const auto& target = basis[a + b];
          const int z = static_cast<int>(std::find(target.begin(), target.end(), U) - target.begin());
          Vec v = Vec::Zero(g.dims[a + b - 1]);
          v(z) = F.sign(inversions);
          m[{{a, static_cast<int>(s)}, {b, static_cast<int>(t)}}] = v;
        }
  AInfAlgebra A = tabulated_m(F, g, 2, m);
  A.label = "Λ(" + std::to_string(d) + ")";
  return A;
}

AInfAlgebra transport(const AInfAlgebra& A, const std::vector<Mat>& phi) {
  const Field F = A.field();
  const int lo = A.lo();
  std::vector<Mat> inv;
  for (int n = lo; n <= A.hi(); ++n) {
    const Mat& M = phi.at(n - lo);
    if (M.rows() != A.dim(n) || M.cols() != A.dim(n)) throw InputError("transport: block shape mismatch");
    inv.push_back(inverse(F, M));
  }
  auto ap = std::make_shared<AInfAlgebra>(A);
  auto fw = std::make_shared<std::vector<Mat>>(phi);
  auto bw = std::make_shared<std::vector<Mat>>(inv);
  Multilinear b = [ap, fw, bw, lo, F](const std::vector<int>& degs, const Args& args) -> Vec {
    std::vector<Vec> pulled;
    for (std::size_t k = 0; k < args.size(); ++k) pulled.push_back(F.mul((*bw)[degs[k] - lo], *args[k]));
    Args pa;
    for (auto& v : pulled) pa.push_back(&v);
    Vec v = ap->b(degs, pa);
    if (v.size() == 0) return v;
    int sum = 0;
    for (int d : degs) sum += d;
    return F.mul((*fw)[sum + 2 - static_cast<int>(degs.size()) - lo], v);
  };
  std::vector<bool> van(A.cap() + 1);
  for (int n = 0; n <= A.cap(); ++n) van[n] = A.vanishes(n);
  AInfAlgebra out(F, A.space(), A.cap(), b, van);
  out.label = A.label;
  return out;
}

}  // namespace ainf
