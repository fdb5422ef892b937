#include "ainf/algebras.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

namespace ainf {

// ---------------------------------------------------------------- groups

bool FiniteGroupData::abelian() const {
  for (int a = 0; a < order(); ++a)
    for (int b = 0; b < a; ++b)
      if (mult[a][b] != mult[b][a]) return false;
  return true;
}

int FiniteGroupData::inverse(int a) const {
  for (int b = 0; b < order(); ++b)
    if (mult[a][b] == identity) return b;
  return -1;
}

FiniteGroupData make_group(std::vector<std::string> elements, std::vector<std::vector<int>> mult) {
  const int n = static_cast<int>(elements.size());
  if (n == 0) throw InputError("group: no elements");
  if (static_cast<int>(mult.size()) != n) throw InputError("group: table has wrong size");
  for (auto& row : mult) {
    if (static_cast<int>(row.size()) != n) throw InputError("group: table has wrong size");
    for (int x : row)
      if (x < 0 || x >= n) throw InputError("group: table entry out of range");
  }
  FiniteGroupData G{std::move(elements), std::move(mult), -1};
  for (int e = 0; e < n && G.identity < 0; ++e) {
    bool ok = true;
    for (int a = 0; a < n && ok; ++a) ok = G.mult[e][a] == a && G.mult[a][e] == a;
    if (ok) G.identity = e;
  }
  if (G.identity < 0) throw InputError("group: no identity element");
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (G.mult[G.mult[a][b]][c] != G.mult[a][G.mult[b][c]]) throw InputError("group: not associative");
  for (int a = 0; a < n; ++a) {
    int b = G.inverse(a);
    if (b < 0 || G.mult[b][a] != G.identity) throw InputError("group: missing inverse");
  }
  return G;
}

FiniteGroupData cyclic_group(int n) {
  if (n < 1) throw InputError("cyclic: order must be positive");
  std::vector<std::string> el;
  std::vector<std::vector<int>> m(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a) {
    el.push_back(a == 0 ? "e" : (a == 1 ? "g" : "g^" + std::to_string(a)));
    for (int b = 0; b < n; ++b) m[a][b] = (a + b) % n;
  }
  return make_group(el, m);
}

FiniteGroupData elementary_abelian_group(int p, int d) {
  if (d < 0) throw InputError("elem_abelian: negative rank");
  FiniteGroupData G = cyclic_group(1);
  G.elements = {"e"};
  for (int k = 0; k < d; ++k) G = direct_product(G, cyclic_group(p));
  return G;
}

FiniteGroupData heisenberg_group(int p) {
  const int n = p * p * p;
  std::vector<std::string> el(n);
  std::vector<std::vector<int>> m(n, std::vector<int>(n));
  auto enc = [p](int a, int b, int c) { return (a * p + b) * p + c; };
  for (int x = 0; x < n; ++x) {
    const int a = x / (p * p), b = (x / p) % p, c = x % p;
    el[x] = "(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")";
    for (int y = 0; y < n; ++y) {
      const int a2 = y / (p * p), b2 = (y / p) % p, c2 = y % p;
      m[x][y] = enc((a + a2) % p, (b + b2) % p, (c + c2 + a * b2) % p);
    }
  }
  return make_group(el, m);
}

FiniteGroupData direct_product(const FiniteGroupData& G, const FiniteGroupData& H) {
  const int g = G.order(), h = H.order();
  std::vector<std::string> el;
  std::vector<std::vector<int>> m(g * h, std::vector<int>(g * h));
  for (int a = 0; a < g; ++a)
    for (int b = 0; b < h; ++b) {
      const std::string& x = G.elements[a];
      const std::string& y = H.elements[b];
      if (a == G.identity && b == H.identity)
        el.push_back("e");
      else if (b == H.identity)
        el.push_back(x == "e" ? "e" : x + "·1");
      else
        el.push_back((a == G.identity ? std::string("1") : x) + "·" + y);
      for (int a2 = 0; a2 < g; ++a2)
        for (int b2 = 0; b2 < h; ++b2) m[a * h + b][a2 * h + b2] = G.mult[a][a2] * h + H.mult[b][b2];
    }
  // Labels: keep them unique and readable for the common cases.
  if (g == 1) el = H.elements;
  return make_group(el, m);
}

std::pair<FiniteGroupData, std::vector<int>> subgroup(const FiniteGroupData& G, const std::vector<int>& members) {
  std::vector<int> emb = members;
  std::sort(emb.begin(), emb.end());
  emb.erase(std::unique(emb.begin(), emb.end()), emb.end());
  // Identity first so that labels read naturally.
  auto it = std::find(emb.begin(), emb.end(), G.identity);
  if (it == emb.end()) throw InputError("subgroup: identity missing");
  std::rotate(emb.begin(), it, it + 1);
  std::map<int, int> pos;
  for (std::size_t k = 0; k < emb.size(); ++k) {
    if (emb[k] < 0 || emb[k] >= G.order()) throw InputError("subgroup: element out of range");
    pos[emb[k]] = static_cast<int>(k);
  }
  std::vector<std::string> el;
  std::vector<std::vector<int>> m(emb.size(), std::vector<int>(emb.size()));
  for (std::size_t a = 0; a < emb.size(); ++a) {
    el.push_back(G.elements[emb[a]]);
    for (std::size_t b = 0; b < emb.size(); ++b) {
      auto f = pos.find(G.mult[emb[a]][emb[b]]);
      if (f == pos.end()) throw InputError("subgroup: not closed under multiplication");
      m[a][b] = f->second;
    }
  }
  return {make_group(el, m), emb};
}

// ---------------------------------------------------------------- algebras

Vec AugmentedAlgebra::multiply(const Vec& a, const Vec& b) const {
  Vec out = Vec::Zero(n_);
  for (int i = 0; i < n_; ++i) {
    if (a(i) == 0) continue;
    for (int j = 0; j < n_; ++j) {
      if (b(j) == 0) continue;
      out += F_.mul(a(i), b(j)) * prod(i, j);
    }
  }
  return F_.reduced(out);
}

Vec AugmentedAlgebra::unit() const {
  Vec u = Vec::Zero(n_);
  u(0) = 1;
  return u;
}

bool AugmentedAlgebra::commutative() const {
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < i; ++j)
      if (prod(i, j) != prod(j, i)) return false;
  return true;
}

AugmentedAlgebra AugmentedAlgebra::from_table(const Field& F, std::vector<std::string> names, const Vec& unit,
                                              const Vec& aug, const std::vector<Vec>& table) {
  const int n = static_cast<int>(names.size());
  if (n == 0) throw InputError("algebra: empty basis");
  if (unit.size() != n || aug.size() != n) throw InputError("algebra: unit/aug have wrong length");
  if (static_cast<int>(table.size()) != n * n) throw InputError("algebra: table has wrong size");
  for (auto& v : table)
    if (v.size() != n) throw InputError("algebra: product vector has wrong length");
  Vec u = F.reduced(unit), e = F.reduced(aug);
  if (F.reduce(e.dot(u)) != 1) throw InputError("algebra: augmentation of the unit is not 1");

  int j0 = 0;
  while (j0 < n && u(j0) == 0) ++j0;
  Mat T(n, n);
  T.col(0) = u;
  std::vector<std::string> adapted{"1"};
  for (int j = 0, k = 1; j < n; ++j) {
    if (j == j0) continue;
    Vec b = Vec::Zero(n);
    b(j) = 1;
    const Int ej = e(j);
    if (ej != 0) b = F.reduced(b - ej * u);
    T.col(k++) = b;
    adapted.push_back(ej == 0 ? names[j] : names[j] + (ej == 1 ? "-1" : "-" + std::to_string(ej)));
  }
  if (rank(F, T) != n) throw InputError("algebra: unit lies in the augmentation ideal span");
  Mat Tinv = inverse(F, T);

  auto mult_input = [&](const Vec& a, const Vec& b) {
    Vec out = Vec::Zero(n);
    for (int i = 0; i < n; ++i) {
      if (a(i) == 0) continue;
      for (int j = 0; j < n; ++j)
        if (b(j) != 0) out = F.reduced(out + F.mul(a(i), b(j)) * F.reduced(table[i * n + j]));
    }
    return out;
  };

  AugmentedAlgebra A;
  A.F_ = F;
  A.n_ = n;
  A.names_ = adapted;
  A.input_names_ = std::move(names);
  A.to_input_ = T;
  A.table_.resize(n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) A.table_[i * n + j] = F.mul(Tinv, mult_input(T.col(i), T.col(j)));

  // Unit, ε, associativity.
  const Vec one = A.unit();
  for (int i = 0; i < n; ++i) {
    Vec ei = Vec::Zero(n);
    ei(i) = 1;
    if (A.prod(0, i) != ei || A.prod(i, 0) != ei) throw InputError("algebra: unit law fails");
    for (int j = 1; j < n; ++j)
      if (i >= 1 && A.prod(i, j)(0) != 0) throw InputError("algebra: augmentation is not multiplicative");
  }
  for (int i = 1; i < n; ++i)
    for (int j = 1; j < n; ++j) {
      const Vec& ij = A.prod(i, j);
      for (int k = 1; k < n; ++k) {
        Vec left = Vec::Zero(n), right = Vec::Zero(n);
        for (int l = 0; l < n; ++l) {
          if (ij(l) != 0) left += ij(l) * A.prod(l, k);
          const Int c = A.prod(j, k)(l);
          if (c != 0) right += c * A.prod(i, l);
        }
        if (F.reduced(left) != F.reduced(right)) throw InputError("algebra: not associative");
      }
    }
  (void)one;

  // Nilpotency of Ā: powers Ā^k until zero.
  std::vector<Vec> power;
  for (int i = 1; i < n; ++i) {
    Vec v = Vec::Zero(n);
    v(i) = 1;
    power.push_back(v);
  }
  int nu = 1;
  int prev_dim = n - 1;
  while (!power.empty()) {
    RowReducer next(F, n);
    for (auto& x : power)
      for (int j = 1; j < n; ++j) next.insert(A.multiply(x, T.col(0) * 0 + Vec::Unit(n, j)));
    ++nu;
    if (next.rank() == prev_dim) throw InputError("algebra: augmentation ideal is not nilpotent (not local)");
    prev_dim = next.rank();
    Mat B = next.matrix();
    power.clear();
    for (int r = 0; r < B.rows(); ++r) power.push_back(B.row(r).transpose());
  }
  A.nu_ = (n == 1) ? 1 : nu;
  return A;
}

AugmentedAlgebra group_algebra(const FiniteGroupData& G, Int p) {
  Field F(p);
  Int m = G.order();
  while (m % p == 0) m /= p;
  if (m != 1) throw InputError("group algebra: order " + std::to_string(G.order()) + " is not a power of " + std::to_string(p));
  const int n = G.order();
  std::vector<Vec> table(n * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) table[a * n + b] = Vec::Unit(n, G.mult[a][b]);
  std::vector<std::string> names = G.elements;
  return AugmentedAlgebra::from_table(F, names, Vec::Unit(n, G.identity), Vec::Ones(n), table);
}

AugmentedAlgebra trunc_poly(int n, Int p) {
  if (n < 1) throw InputError("trunc_poly: n must be positive");
  Field F(p);
  std::vector<std::string> names;
  std::vector<Vec> table(n * n);
  for (int a = 0; a < n; ++a) {
    names.push_back(a == 0 ? "1" : (a == 1 ? "x" : "x^" + std::to_string(a)));
    for (int b = 0; b < n; ++b) table[a * n + b] = a + b < n ? Vec(Vec::Unit(n, a + b)) : Vec(Vec::Zero(n));
  }
  return AugmentedAlgebra::from_table(F, names, Vec::Unit(n, 0), Vec::Unit(n, 0), table);
}

AugmentedAlgebra opposite(const AugmentedAlgebra& A) {
  const int n = A.dim();
  std::vector<Vec> table(n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) table[i * n + j] = A.prod(j, i);
  AugmentedAlgebra B = AugmentedAlgebra::from_table(A.field(), A.names(), Vec::Unit(n, 0), Vec::Unit(n, 0), table);
  B.label = A.label.empty() ? "" : "op(" + A.label + ")";
  return B;
}

// ---------------------------------------------------------------- catalog

namespace {

std::string strip(std::string s) {
  s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); }), s.end());
  return s;
}

// "cyclic(4)" -> ("cyclic", "4"); "cyclic:4" -> same; "heisenberg" -> ("heisenberg", "").
std::pair<std::string, std::string> split_head(const std::string& s) {
  auto paren = s.find('(');
  auto colon = s.find(':');
  if (paren != std::string::npos && (colon == std::string::npos || paren < colon)) {
    if (s.back() != ')') throw InputError("catalog: unbalanced parentheses in '" + s + "'");
    return {s.substr(0, paren), s.substr(paren + 1, s.size() - paren - 2)};
  }
  if (colon != std::string::npos) return {s.substr(0, colon), s.substr(colon + 1)};
  return {s, ""};
}

int parse_int(const std::string& s, const std::string& what) {
  try {
    std::size_t used = 0;
    int v = std::stoi(s, &used);
    if (used != s.size()) throw InputError("");
    return v;
  } catch (...) {
    throw InputError("catalog: expected an integer for " + what + ", got '" + s + "'");
  }
}

std::vector<std::string> split_factors(const std::string& s) {
  std::vector<std::string> out;
  int depth = 0;
  std::string cur;
  for (char c : s) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if ((c == ',' || c == '*') && depth == 0) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

FiniteGroupData catalog_group(const std::string& spec, Int p) {
  auto [head, arg] = split_head(spec);
  if (head == "cyclic") return cyclic_group(parse_int(arg, "cyclic order"));
  if (head == "elem_abelian") return elementary_abelian_group(static_cast<int>(p), parse_int(arg, "rank"));
  if (head == "heisenberg") return heisenberg_group(static_cast<int>(p));
  if (head == "product") {
    auto parts = split_factors(arg);
    if (parts.empty()) throw InputError("catalog: empty product");
    FiniteGroupData G = catalog_group(parts[0], p);
    for (std::size_t k = 1; k < parts.size(); ++k) G = direct_product(G, catalog_group(parts[k], p));
    return G;
  }
  throw InputError("catalog: unknown group '" + head + "'");
}

}  // namespace

CatalogEntry catalog(const std::string& raw, Int p) {
  const std::string name = strip(raw);
  Field F(p);
  auto [head, arg] = split_head(name);
  CatalogEntry e;
  e.name = name;
  if (head == "trunc_poly") {
    e.algebra = trunc_poly(parse_int(arg, "truncation degree"), p);
  } else {
    e.group = catalog_group(name, p);
    e.algebra = group_algebra(*e.group, p);
  }
  e.algebra.label = name;
  return e;
}

// ---------------------------------------------------------------- words

WordIndex::WordIndex(int g, int W) : g_(g), W_(W) {
  if (g < 0 || W < 0) throw InputError("words: negative size");
  offsets_.push_back(0);
  powers_.push_back(1);
  for (int w = 0; w <= W; ++w) {
    offsets_.push_back(offsets_.back() + powers_.back());
    powers_.push_back(powers_.back() * g);
  }
}

int WordIndex::weight(int idx) const {
  int w = 0;
  while (offsets_[w + 1] <= idx) ++w;
  return w;
}

int WordIndex::index(const std::vector<int>& word) const {
  const int w = static_cast<int>(word.size());
  if (w > W_) return -1;
  int x = 0;
  for (int c : word) x = x * g_ + c;
  return offsets_[w] + x;
}

std::vector<int> WordIndex::word(int idx) const {
  const int w = weight(idx);
  int x = idx - offsets_[w];
  std::vector<int> out(w);
  for (int k = w - 1; k >= 0; --k) {
    out[k] = x % g_;
    x /= g_;
  }
  return out;
}

int WordIndex::concat(int a, int b) const {
  const int wa = weight(a), wb = weight(b);
  if (wa + wb > W_) return -1;
  return offsets_[wa + wb] + (a - offsets_[wa]) * powers_[wb] + (b - offsets_[wb]);
}

// ---------------------------------------------------------------- presented

PresentedAlgebra::PresentedAlgebra(const Field& F, std::vector<std::string> generators, std::vector<Vec> relations,
                                   int W)
    : F_(F),
      words_(static_cast<int>(generators.size()), W),
      names_(std::move(generators)),
      relations_(std::move(relations)),
      ideal_(F, words_.size()) {
  const int N = words_.size();
  for (auto& r : relations_) {
    if (r.size() != N) throw InputError("presented algebra: relation has wrong length");
    r = F_.reduced(r);
  }
  // Two-sided ideal: u·r·v for all words u, v, truncated at weight W.
  // Rows are inserted by increasing outer weight so that sparse rows come first.
  std::vector<std::vector<std::pair<int, Int>>> terms;
  std::vector<int> lowest;
  for (auto& r : relations_) {
    std::vector<std::pair<int, Int>> t;
    for (int k = 0; k < N; ++k)
      if (r(k) != 0) t.push_back({k, r(k)});
    if (t.empty()) continue;
    lowest.push_back(words_.weight(t.front().first));
    terms.push_back(std::move(t));
  }
  for (int outer = 0; outer <= W; ++outer)
    for (std::size_t ri = 0; ri < terms.size(); ++ri) {
      if (lowest[ri] + outer > W) continue;
      for (int a = 0; a <= outer; ++a) {
        const int b = outer - a;
        for (int u = words_.offset(a); u < words_.offset(a) + words_.count(a); ++u)
          for (int v = words_.offset(b); v < words_.offset(b) + words_.count(b); ++v) {
            std::vector<Int> row(N, 0);
            bool any = false;
            for (auto [k, c] : terms[ri]) {
              int uk = words_.concat(u, k);
              if (uk < 0) continue;
              int ukv = words_.concat(uk, v);
              if (ukv < 0) continue;
              row[ukv] = c;
              any = true;
            }
            if (any) ideal_.insert(std::move(row));
          }
      }
    }
  for (int k = 0; k < N; ++k)
    if (ideal_.pivot_row(k) < 0) normal_.push_back(k);
}

std::vector<int> PresentedAlgebra::weight_dims() const {
  std::vector<int> out(words_.cap() + 1, 0);
  for (int k : normal_) ++out[words_.weight(k)];
  return out;
}

Vec PresentedAlgebra::one() const { return Vec::Unit(words_.size(), 0); }

Vec PresentedAlgebra::generator(int a) const { return Vec::Unit(words_.size(), words_.index({a})); }

Vec PresentedAlgebra::word(const std::vector<int>& w) const {
  int k = words_.index(w);
  return k < 0 ? Vec(Vec::Zero(words_.size())) : Vec(Vec::Unit(words_.size(), k));
}

Vec PresentedAlgebra::concat(const Vec& a, const Vec& b) const {
  const int N = words_.size();
  Vec out = Vec::Zero(N);
  for (int i = 0; i < N; ++i) {
    if (a(i) == 0) continue;
    for (int j = 0; j < N; ++j) {
      if (b(j) == 0) continue;
      int k = words_.concat(i, j);
      if (k >= 0) out(k) = F_.reduce(out(k) + a(i) * b(j));
    }
  }
  return out;
}

Vec PresentedAlgebra::reduce(const Vec& v) const { return ideal_.reduce(v); }

Vec PresentedAlgebra::to_normal(const Vec& reduced) const {
  Vec out(normal_.size());
  for (std::size_t k = 0; k < normal_.size(); ++k) out(k) = reduced(normal_[k]);
  return out;
}

Vec PresentedAlgebra::from_normal(const Vec& coords) const {
  Vec out = Vec::Zero(words_.size());
  for (std::size_t k = 0; k < normal_.size(); ++k) out(normal_[k]) = coords(k);
  return out;
}

bool PresentedAlgebra::commutative() const {
  for (int a = 0; a < generators(); ++a)
    for (int b = 0; b < a; ++b) {
      Vec ab = concat(generator(a), generator(b));
      Vec ba = concat(generator(b), generator(a));
      if ((reduce(F_.reduced(ab - ba)).array() != 0).any()) return false;
    }
  return true;
}

std::string PresentedAlgebra::render(const Vec& v) const {
  std::ostringstream os;
  bool first = true;
  const Int p = F_.p();
  for (int k = 0; k < v.size(); ++k) {
    Int c = F_.reduce(v(k));
    if (c == 0) continue;
    bool negative = p > 2 && c > p / 2;
    Int mag = negative ? p - c : c;
    if (first)
      os << (negative ? "-" : "");
    else
      os << (negative ? " - " : " + ");
    auto w = words_.word(k);
    std::string mono;
    for (std::size_t t = 0; t < w.size(); ++t) mono += (t ? "*" : "") + names_[w[t]];
    if (mono.empty())
      os << mag;
    else if (mag == 1)
      os << mono;
    else
      os << mag << "*" << mono;
    first = false;
  }
  return first ? "0" : os.str();
}

PresentedAlgebra truncated_quotient(const Field& F, std::vector<std::string> generators, std::vector<Vec> relations,
                                    int W) {
  return PresentedAlgebra(F, std::move(generators), std::move(relations), W);
}

// ---------------------------------------------------------------- maps

AlgebraView view(std::shared_ptr<const AugmentedAlgebra> A) {
  AlgebraView v;
  v.F = A->field();
  v.dim = A->dim();
  v.unit = A->unit();
  v.mul = [A](const Vec& a, const Vec& b) { return A->multiply(a, b); };
  return v;
}

AlgebraView view(std::shared_ptr<const PresentedAlgebra> P) {
  AlgebraView v;
  v.F = P->field();
  v.dim = P->dim();
  v.unit = P->to_normal(P->reduce(P->one()));
  v.mul = [P](const Vec& a, const Vec& b) {
    return P->to_normal(P->multiply(P->from_normal(a), P->from_normal(b)));
  };
  return v;
}

MapReport verify_algebra_map(const AlgebraMap& phi) {
  const Field& F = phi.source.F;
  MapReport r;
  const Mat& M = phi.matrix;
  if (M.rows() != phi.target.dim || M.cols() != phi.source.dim) throw InputError("algebra map: wrong matrix shape");
  r.unit = F.mul(M, phi.source.unit) == F.reduced(phi.target.unit);
  r.multiplicative = true;
  const int n = phi.source.dim;
  for (int i = 0; i < n && r.multiplicative; ++i)
    for (int j = 0; j < n && r.multiplicative; ++j) {
      Vec ei = Vec::Unit(n, i), ej = Vec::Unit(n, j);
      Vec lhs = F.mul(M, phi.source.mul(ei, ej));
      Vec rhs = phi.target.mul(Vec(M.col(i)), Vec(M.col(j)));
      r.multiplicative = lhs == F.reduced(rhs);
    }
  r.dims_equal = phi.source.dim == phi.target.dim;
  r.bijective = r.dims_equal && rank(F, M) == n;
  return r;
}

}  // namespace ainf
