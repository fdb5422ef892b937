#include "ainf/barcobar.hpp"

namespace ainf {

namespace {

bool is_zero(const Vec& v) { return v.size() == 0 || (v.array() == 0).all(); }

std::string show(const Word& w) {
  std::string s;
  for (auto& l : w) s += (s.empty() ? "" : " ") + std::to_string(l.deg) + ":" + std::to_string(l.idx);
  return "[" + s + "]";
}

}  // namespace

DualBar::DualBar(AInfPtr A, int W) : A_(std::move(A)), W_(W) {
  if (W < 1) throw InputError("dual bar: weight cap must be >= 1");
  const AInfAlgebra& M = *A_;
  const Field& F = M.field();
  for (int d = M.lo(); d <= M.hi(); ++d)
    for (int k = 0; k < M.dim(d); ++k) diff_[{d, k}];
  for (int n = 1; n <= std::min(W, M.cap()); ++n) {
    if (M.vanishes(n)) continue;
    for (auto& pat : degree_patterns(M.space(), n, M.lo() + n - 2, M.hi() + n - 2)) {
      int out = 2 - n;
      for (int d : pat) out += d;
      std::vector<int> idx(n, 0);
      for (;;) {
        Vec v = M.b_basis(pat, idx);
        if (!is_zero(v)) {
          Word w;
          for (int k = 0; k < n; ++k) w.push_back({pat[k], idx[k]});
          for (int k = 0; k < v.size(); ++k)
            if (v(k) != 0) diff_[{out, k}][w] = F.reduce(v(k));
        }
        int k = n - 1;
        while (k >= 0 && ++idx[k] == M.dim(pat[k])) idx[k--] = 0;
        if (k < 0) break;
      }
    }
  }
}

const Tensor& DualBar::differential(const Letter& e) const {
  auto it = diff_.find(e);
  if (it == diff_.end()) throw InputError("dual bar: no such generator");
  return it->second;
}

Tensor DualBar::apply(const Tensor& t) const {
  const Field& F = field();
  Tensor out;
  for (auto& [w, c] : t) {
    int parity = 0;
    for (std::size_t i = 0; i < w.size(); ++i) {
      const Int s = F.sign(parity);
      for (auto& [u, a] : differential(w[i])) {
        if (w.size() - 1 + u.size() > static_cast<std::size_t>(W_)) continue;
        Word x(w.begin(), w.begin() + i);
        x.insert(x.end(), u.begin(), u.end());
        x.insert(x.end(), w.begin() + i + 1, w.end());
        Int& slot = out[x];
        slot = F.reduce(slot + s * F.reduce(c * a));
      }
      parity += generator_degree(w[i]) & 1;
    }
  }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

IdentityReport DualBar::check() const {
  IdentityReport rep;
  bool any = false;
  for (auto& [e, t] : diff_) any = any || !t.empty();
  for (int w = 1; w <= W_; ++w) rep.weights.push_back({w, 0, 0, !any});
  if (!any) return rep;
  for (auto& [e, t] : diff_) {
    for (int w = 1; w <= W_; ++w) ++rep.weights[w - 1].checked;
    for (auto& [x, c] : apply(t)) {
      auto& wc = rep.weights[x.size() - 1];
      if (wc.failures++ == 0 && rep.first_failure.empty())
        rep.first_failure = "(m*)^2 of generator " + show({e}) + " has coefficient " + std::to_string(c) + " on " + show(x);
    }
  }
  return rep;
}

DualBar dual_bar(AInfPtr A, int W) { return DualBar(std::move(A), W); }

PresentedAlgebra classical_hull(const DualBar& B) {
  const AInfAlgebra& A = B.algebra();
  if (!A.minimal()) throw InputError("classical hull: the A_inf-algebra must be minimal");
  const int g = A.dim(1);
  std::vector<std::string> names;
  for (int a = 0; a < g; ++a) names.push_back("x" + std::to_string(a + 1));
  WordIndex words(g, B.weight_cap());
  std::vector<Vec> rel;
  for (int k = 0; k < A.dim(2); ++k) {
    Vec r = Vec::Zero(words.size());
    for (auto& [w, c] : B.differential({2, k})) {
      std::vector<int> letters;
      for (auto& l : w) {
        if (l.deg != 1) break;
        letters.push_back(l.idx);
      }
      if (letters.size() == w.size()) r(words.index(letters)) = c;
    }
    rel.push_back(std::move(r));
  }
  return truncated_quotient(A.field(), std::move(names), std::move(rel), B.weight_cap());
}

std::vector<Vec> quadratic_relations(const DualBar& B) {
  const AInfAlgebra& A = B.algebra();
  const int g = A.dim(1);
  std::vector<Vec> out;
  for (int k = 0; k < A.dim(2); ++k) {
    Vec r = Vec::Zero(g * g);
    for (auto& [w, c] : B.differential({2, k}))
      if (w.size() == 2 && w[0].deg == 1 && w[1].deg == 1) r(w[0].idx * g + w[1].idx) = c;
    out.push_back(std::move(r));
  }
  return out;
}

bool quadratic_part_is_alternating(const DualBar& B) {
  const AInfAlgebra& A = B.algebra();
  const Field& F = A.field();
  const int g = A.dim(1);
  for (int a = 0; a < g; ++a)
    for (int b = a; b < g; ++b) {
      Vec x = Vec::Unit(g, a), y = Vec::Unit(g, b);
      Vec xy = A.m({1, 1}, {&x, &y}), yx = A.m({1, 1}, {&y, &x});
      if (a == b ? !is_zero(xy) : !is_zero(xy.size() ? Vec(F.reduced(xy + yx)) : xy))
        throw InputError("alternating test: m_2 on degree 1 is not exterior");
    }
  auto rel = quadratic_relations(B);
  Mat R(g * g, rel.size());
  for (std::size_t k = 0; k < rel.size(); ++k) R.col(k) = rel[k];
  Mat Alt = Mat::Zero(g * g, g * (g - 1) / 2);
  int c = 0;
  for (int a = 0; a < g; ++a)
    for (int b = a + 1; b < g; ++b, ++c) {
      Alt(a * g + b, c) = 1;
      Alt(b * g + a, c) = F.p() - 1;
    }
  Mat both(g * g, R.cols() + Alt.cols());
  both << R, Alt;
  const int r = rank(F, R), s = rank(F, Alt);
  return r == s && rank(F, both) == s;
}

}  // namespace ainf
