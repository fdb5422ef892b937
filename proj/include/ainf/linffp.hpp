#pragma once
// Exact linear algebra over a prime field F_p.
//
// Matrices are Eigen dense integer matrices holding residues in [0, p); the
// modulus travels separately in a Field.  All routines return reduced entries.

#include <Eigen/Dense>
#include <Eigen/SparseCore>

#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace ainf {

using Int = std::int64_t;
using Mat = Eigen::Matrix<Int, Eigen::Dynamic, Eigen::Dynamic>;
using Vec = Eigen::Matrix<Int, Eigen::Dynamic, 1>;
using SpMat = Eigen::SparseMatrix<Int, Eigen::RowMajor>;

// Bad user input (malformed algebra, wrong sizes, ...).
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An internal consistency gate failed.  Never expected in a correct build.
struct GateFailure : std::logic_error {
  using std::logic_error::logic_error;
};

bool is_prime(Int n);

class Field {
 public:
  // p < 2^16 keeps every dot product of reduced entries inside int64.
  static constexpr Int kMaxPrime = 65521;

  Field() : p_(2), magic_(~std::uint64_t{0} / 2 + 1) {}
  explicit Field(Int p);

  // x mod p for 0 <= x < 2^32 (Lemire's fastmod); p^2 < 2^32 always holds.
  Int fmod(Int x) const {
    const std::uint64_t low = magic_ * static_cast<std::uint64_t>(x);
    return static_cast<Int>((static_cast<unsigned __int128>(low) * static_cast<std::uint64_t>(p_)) >> 64);
  }

  Int p() const { return p_; }
  Int reduce(Int x) const {
    Int r = x % p_;
    return r < 0 ? r + p_ : r;
  }
  Int add(Int a, Int b) const { return reduce(a + b); }
  Int sub(Int a, Int b) const { return reduce(a - b); }
  Int mul(Int a, Int b) const { return reduce(a * b); }
  Int neg(Int a) const { return a == 0 ? 0 : p_ - a; }
  Int inv(Int a) const;
  Int pow(Int a, Int e) const;
  Int sign(int parity) const { return (parity & 1) ? p_ - 1 : 1; }

  template <typename Derived>
  auto reduced(const Eigen::MatrixBase<Derived>& m) const {
    const Int p = p_;
    return m.unaryExpr([p](Int x) {
      Int r = x % p;
      return r < 0 ? r + p : r;
    });
  }

  // Large products go through double GEMM, exact while k (p-1)^2 < 2^53.
  Mat mul(const Mat& a, const Mat& b) const;
  Vec mul(const Mat& a, const Vec& v) const { return reduced(a * v); }
  Mat mul(const SpMat& a, const Mat& b) const { return reduced(Mat(a * b)); }
  Mat mul(const Mat& a, const SpMat& b) const { return reduced(Mat(a * b)); }
  Vec mul(const SpMat& a, const Vec& v) const { return reduced(Vec(a * v)); }

  bool operator==(const Field& o) const { return p_ == o.p_; }

 private:
  Int p_;
  std::uint64_t magic_;
};

// A single field element carrying its modulus; thin convenience type.
struct Scalar {
  Int residue = 0;
  Int modulus = 2;

  Scalar() = default;
  Scalar(Int value, Int p) : residue(Field(p).reduce(value)), modulus(p) {}
  friend Scalar operator+(Scalar a, Scalar b) { return {a.residue + b.residue, a.modulus}; }
  friend Scalar operator-(Scalar a, Scalar b) { return {a.residue - b.residue, a.modulus}; }
  friend Scalar operator*(Scalar a, Scalar b) { return {a.residue * b.residue, a.modulus}; }
  Scalar inverse() const { return {Field(modulus).inv(residue), modulus}; }
  friend bool operator==(Scalar a, Scalar b) {
    return a.residue == b.residue && a.modulus == b.modulus;
  }
};

struct Rref {
  Mat R;
  std::vector<int> pivots;
  int rank = 0;
};

Rref rref(const Field& F, const Mat& M);
int rank(const Field& F, const Mat& M);

// Columns form a basis of {v : Mv = 0}; the basis is the canonical one read
// off the rref (one vector per free column).
Mat kernel_basis(const Field& F, const Mat& M);

// Some x with Mx = b, or nullopt.  Throws InputError on shape mismatch.
std::optional<Vec> solve(const Field& F, const Mat& M, const Vec& b);
// Column-wise solve of MX = B; nullopt if any column is unsolvable.
std::optional<Mat> solve(const Field& F, const Mat& M, const Mat& B);

Mat inverse(const Field& F, const Mat& M);

// Canonical basis (rref rows, transposed) of the column space of M.
Mat column_space(const Field& F, const Mat& M);

// Returns C (as columns) with U ⊕ C = W.  Throws InputError if U ⊄ W.
// With seed 0 the choice is canonical: W is put in canonical form and the
// basis vectors at the free positions of U's coordinates are taken, which is
// the lexicographically first standard completion.  A nonzero seed draws
// random vectors of W instead, giving a different (still valid) complement.
Mat complement(const Field& F, const Mat& U, const Mat& W, std::uint64_t seed = 0);

bool in_span(const Field& F, const Mat& basis, const Vec& v);

Mat identity(int n);
SpMat sparse(const Mat& M);

// Incremental fully reduced row echelon form.  Rows are inserted one at a
// time; pivot = leftmost nonzero column.  Cheap when inserted rows are sparse.
class RowReducer {
 public:
  RowReducer(const Field& F, int ncols);

  // Reduces v against the current rows; returns true and stores it if the
  // remainder is nonzero.
  bool insert(std::vector<Int> v);
  bool insert(const Vec& v);
  // Reduces v in place (entries end up in [0, p)).
  void reduce(std::vector<Int>& v) const;
  Vec reduce(const Vec& v) const;

  int rank() const { return static_cast<int>(rows_.size()); }
  int cols() const { return ncols_; }
  const std::vector<int>& pivots() const { return pivots_; }
  // Row owning a pivot column, or -1.
  int pivot_row(int col) const { return pivot_row_[col]; }
  const std::vector<Int>& row(int r) const { return rows_[r]; }
  // Row space basis as a matrix (rows sorted by pivot column).
  Mat matrix() const;
  // Basis of {x : r·x = 0 for every stored row r}.
  Mat null_space() const;

 private:
  Field F_;
  int ncols_;
  std::vector<std::vector<Int>> rows_;
  std::vector<int> pivots_;
  std::vector<int> pivot_row_;
};

}  // namespace ainf
