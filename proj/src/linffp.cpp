#include "ainf/linffp.hpp"

#include <algorithm>

namespace ainf {

bool is_prime(Int n) {
  if (n < 2) return false;
  for (Int d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

Field::Field(Int p) : p_(p), magic_(~std::uint64_t{0} / static_cast<std::uint64_t>(p) + 1) {
  if (!is_prime(p)) throw InputError("modulus " + std::to_string(p) + " is not prime");
  if (p > kMaxPrime) throw InputError("modulus " + std::to_string(p) + " too large");
}

Mat Field::mul(const Mat& a, const Mat& b) const {
  const double work = static_cast<double>(a.rows()) * static_cast<double>(a.cols()) * static_cast<double>(b.cols());
  if (work < double(1 << 20)) return reduced(a * b);
  // Mostly-zero factors (differentials, inclusions) go through sparse products.
  const double sa = static_cast<double>((a.array() != 0).count()) / static_cast<double>(a.size());
  const double sb = static_cast<double>((b.array() != 0).count()) / static_cast<double>(b.size());
  if (std::min(sa, sb) < 0.05) {
    if (sa <= sb) return reduced(Mat(sparse(a) * b));
    return reduced(Mat(a * sparse(b)));
  }
  using MatD = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic>;
  const MatD ad = Mat(reduced(a)).cast<double>();
  const MatD bd = Mat(reduced(b)).cast<double>();
  const MatD cd = ad * bd;
  return reduced(cd.cast<Int>());
}

Int Field::pow(Int a, Int e) const {
  Int r = 1;
  a = reduce(a);
  while (e > 0) {
    if (e & 1) r = r * a % p_;
    a = a * a % p_;
    e >>= 1;
  }
  return r;
}

Int Field::inv(Int a) const {
  a = reduce(a);
  if (a == 0) throw std::domain_error("inverse of zero in F_p");
  return pow(a, p_ - 2);
}

Mat identity(int n) { return Mat::Identity(n, n); }

SpMat sparse(const Mat& M) {
  SpMat S(M.rows(), M.cols());
  std::vector<Eigen::Triplet<Int>> t;
  for (Eigen::Index j = 0; j < M.cols(); ++j)
    for (Eigen::Index i = 0; i < M.rows(); ++i)
      if (M(i, j) != 0) t.emplace_back(static_cast<int>(i), static_cast<int>(j), M(i, j));
  S.setFromTriplets(t.begin(), t.end());
  return S;
}

namespace {

using Rows = std::vector<std::vector<Int>>;

Rows to_rows(const Field& F, const Mat& M) {
  Rows a(M.rows(), std::vector<Int>(M.cols()));
  for (Eigen::Index i = 0; i < M.rows(); ++i)
    for (Eigen::Index j = 0; j < M.cols(); ++j) a[i][j] = F.reduce(M(i, j));
  return a;
}

// Gauss-Jordan on row-major storage.  Non-pivot rows are reduced lazily:
// each elimination adds at most (p-1)^2 < 2^32 to an entry.
std::vector<int> gauss_jordan(const Field& F, Rows& a, int ncols, int stop_col) {
  const Int p = F.p();
  std::vector<int> pivots;
  const int nrows = static_cast<int>(a.size());
  int r = 0;
  for (int c = 0; c < stop_col && r < nrows; ++c) {
    int piv = -1;
    for (int i = r; i < nrows; ++i) {
      a[i][c] %= p;
      if (a[i][c] != 0) {
        piv = i;
        break;
      }
    }
    if (piv < 0) continue;
    std::swap(a[r], a[piv]);
    auto& pr = a[r];
    for (int j = c; j < ncols; ++j) pr[j] %= p;
    const Int s = F.inv(pr[c]);
    for (int j = c; j < ncols; ++j) pr[j] = pr[j] * s % p;
    for (int i = 0; i < nrows; ++i) {
      if (i == r) continue;
      auto& row = a[i];
      const Int x = row[c] % p;
      if (x == 0) {
        row[c] = 0;
        continue;
      }
      const Int m = p - x;
      for (int j = c; j < ncols; ++j) row[j] += m * pr[j];
      row[c] = 0;
    }
    pivots.push_back(c);
    ++r;
  }
  for (auto& row : a)
    for (auto& x : row) x %= p;
  return pivots;
}

}  // namespace

Rref rref(const Field& F, const Mat& M) {
  Rows a = to_rows(F, M);
  const int nc = static_cast<int>(M.cols());
  Rref out;
  out.pivots = gauss_jordan(F, a, nc, nc);
  out.rank = static_cast<int>(out.pivots.size());
  out.R.resize(M.rows(), M.cols());
  for (Eigen::Index i = 0; i < M.rows(); ++i)
    for (Eigen::Index j = 0; j < M.cols(); ++j) out.R(i, j) = a[i][j];
  return out;
}

int rank(const Field& F, const Mat& M) {
  if (M.rows() == 0 || M.cols() == 0) return 0;
  // Work on the short side.
  if (M.rows() > M.cols()) {
    RowReducer rr(F, static_cast<int>(M.cols()));
    for (Eigen::Index i = 0; i < M.rows() && rr.rank() < M.cols(); ++i)
      rr.insert(Vec(M.row(i).transpose()));
    return rr.rank();
  }
  return rref(F, M).rank;
}

Mat kernel_basis(const Field& F, const Mat& M) {
  RowReducer rr(F, static_cast<int>(M.cols()));
  for (Eigen::Index i = 0; i < M.rows() && rr.rank() < M.cols(); ++i)
    rr.insert(Vec(M.row(i).transpose()));
  return rr.null_space();
}

std::optional<Mat> solve(const Field& F, const Mat& M, const Mat& B) {
  if (B.rows() != M.rows()) throw InputError("solve: dimension mismatch");
  const int n = static_cast<int>(M.cols());
  const int k = static_cast<int>(B.cols());
  Mat aug(M.rows(), n + k);
  aug << M, B;
  Rows a = to_rows(F, aug);
  auto piv = gauss_jordan(F, a, n + k, n);
  // Rows past the rank must vanish on the right-hand side.
  for (std::size_t r = piv.size(); r < a.size(); ++r)
    for (int j = n; j < n + k; ++j)
      if (a[r][j] != 0) return std::nullopt;
  Mat X = Mat::Zero(n, k);
  for (std::size_t r = 0; r < piv.size(); ++r)
    for (int j = 0; j < k; ++j) X(piv[r], j) = a[r][n + j];
  return X;
}

std::optional<Vec> solve(const Field& F, const Mat& M, const Vec& b) {
  auto X = solve(F, M, Mat(b));
  if (!X) return std::nullopt;
  return Vec(X->col(0));
}

Mat inverse(const Field& F, const Mat& M) {
  if (M.rows() != M.cols()) throw InputError("inverse: matrix not square");
  // A singular M cannot reach every unit vector, so solvability suffices.
  auto X = solve(F, M, identity(static_cast<int>(M.rows())));
  if (!X) throw std::domain_error("inverse: singular matrix");
  return *X;
}

Mat column_space(const Field& F, const Mat& M) {
  RowReducer rr(F, static_cast<int>(M.rows()));
  for (Eigen::Index j = 0; j < M.cols(); ++j) rr.insert(Vec(M.col(j)));
  return rr.matrix().transpose();
}

bool in_span(const Field& F, const Mat& basis, const Vec& v) {
  if (basis.cols() == 0) return (F.reduced(v).array() == 0).all();
  return solve(F, basis, v).has_value();
}

Mat complement(const Field& F, const Mat& U, const Mat& W, std::uint64_t seed) {
  const int n = static_cast<int>(W.rows());
  if (U.rows() != W.rows() && U.cols() > 0) throw InputError("complement: ambient mismatch");
  Mat Wc = column_space(F, W);
  const int m = static_cast<int>(Wc.cols());
  RowReducer wr(F, n);
  for (int j = 0; j < m; ++j) wr.insert(Vec(Wc.col(j)));
  RowReducer ur(F, n);
  for (Eigen::Index j = 0; j < U.cols(); ++j) {
    Vec u = F.reduced(U.col(j));
    if (wr.insert(u)) throw InputError("complement: U is not contained in W");
    ur.insert(u);
  }
  const int target = m - ur.rank();
  Mat C(n, target);
  if (target == 0) return C;
  if (seed == 0) {
    // Coordinates of U in the canonical basis of W are its entries at the
    // pivot positions of W; free coordinates give the completion.
    RowReducer cr(F, m);
    const auto& wp = wr.pivots();
    std::vector<int> order(wp.begin(), wp.end());
    // Wc columns are sorted by pivot; row j of Wc^T has pivot order[j] sorted.
    std::sort(order.begin(), order.end());
    for (Eigen::Index j = 0; j < U.cols(); ++j) {
      Vec coord(m);
      for (int t = 0; t < m; ++t) coord(t) = F.reduce(U(order[t], j));
      cr.insert(coord);
    }
    int k = 0;
    for (int t = 0; t < m; ++t)
      if (cr.pivot_row(t) < 0) C.col(k++) = Wc.col(t);
    return C;
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<Int> dist(0, F.p() - 1);
  int k = 0;
  while (k < target) {
    Vec c(m);
    for (int t = 0; t < m; ++t) c(t) = dist(rng);
    Vec v = F.mul(Wc, c);
    if (ur.insert(v)) C.col(k++) = v;
  }
  return C;
}

// ---------------------------------------------------------------------------

RowReducer::RowReducer(const Field& F, int ncols)
    : F_(F), ncols_(ncols), pivot_row_(ncols, -1) {}

void RowReducer::reduce(std::vector<Int>& v) const {
  const Int p = F_.p();
  // Rows are fully reduced, so each stored row is subtracted at most once and
  // only the pivot entries of the input decide which.
  std::vector<std::pair<int, Int>> hits;
  for (int c = 0; c < ncols_; ++c) {
    Int x = v[c];
    if (x == 0) continue;
    if (x < 0 || x >= p) {
      x %= p;
      if (x < 0) x += p;
      v[c] = x;
    }
    if (x != 0 && pivot_row_[c] >= 0) hits.push_back({pivot_row_[c], p - x});
  }
  for (auto [r, m] : hits) {
    const auto& row = rows_[r];
    for (int j = pivots_[r]; j < ncols_; ++j) v[j] += m * row[j];
  }
  if (hits.empty()) return;
  const bool small = static_cast<Int>(hits.size() + 1) * p * p < (Int{1} << 32);
  for (auto& x : v) x = small ? F_.fmod(x) : x % p;
}

Vec RowReducer::reduce(const Vec& v) const {
  std::vector<Int> w(v.data(), v.data() + v.size());
  for (auto& x : w) x = F_.reduce(x);
  reduce(w);
  return Eigen::Map<Vec>(w.data(), ncols_);
}

bool RowReducer::insert(const Vec& v) {
  return insert(std::vector<Int>(v.data(), v.data() + v.size()));
}

bool RowReducer::insert(std::vector<Int> v) {
  if (static_cast<int>(v.size()) != ncols_) throw InputError("RowReducer: width mismatch");
  reduce(v);
  int c = 0;
  while (c < ncols_ && v[c] == 0) ++c;
  if (c == ncols_) return false;
  const Int p = F_.p();
  const Int s = F_.inv(v[c]);
  for (int j = c; j < ncols_; ++j) v[j] = F_.fmod(v[j] * s);
  for (auto& row : rows_) {
    const Int x = row[c];
    if (x == 0) continue;
    const Int m = p - x;
    for (int j = c; j < ncols_; ++j) row[j] = F_.fmod(row[j] + m * v[j]);
  }
  pivot_row_[c] = static_cast<int>(rows_.size());
  pivots_.push_back(c);
  rows_.push_back(std::move(v));
  return true;
}

Mat RowReducer::matrix() const {
  std::vector<int> order(rows_.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  std::sort(order.begin(), order.end(), [&](int a, int b) { return pivots_[a] < pivots_[b]; });
  Mat M(static_cast<Eigen::Index>(rows_.size()), ncols_);
  for (std::size_t i = 0; i < order.size(); ++i)
    for (int j = 0; j < ncols_; ++j) M(i, j) = rows_[order[i]][j];
  return M;
}

Mat RowReducer::null_space() const {
  Mat N = Mat::Zero(ncols_, ncols_ - rank());
  int k = 0;
  for (int f = 0; f < ncols_; ++f) {
    if (pivot_row_[f] >= 0) continue;
    N(f, k) = 1;
    for (std::size_t r = 0; r < rows_.size(); ++r) N(pivots_[r], k) = F_.neg(rows_[r][f]);
    ++k;
  }
  return N;
}

}  // namespace ainf
