#pragma once
// Graded spaces, cochain complexes and homotopy retracts onto cohomology.

#include "ainf/linffp.hpp"

#include <string>
#include <utility>
#include <vector>

namespace ainf {

// Per-degree blocks of a map of fixed degree shift.  blocks[k] acts on
// source degree lo + k and lands in degree lo + k + shift.
struct GradedMap {
  int lo = 0, hi = -1, shift = 0;
  std::vector<Mat> blocks;

  const Mat& at(int n) const { return blocks.at(n - lo); }
  Mat& at(int n) { return blocks.at(n - lo); }
  bool has(int n) const { return n >= lo && n <= hi; }
};

// Degrees lo..hi are "carried".  The complex also records the spaces in
// degrees lo-1 (source of the incoming differential, used for coboundaries
// in degree lo) and hi+1 (target of the outgoing differential, used for
// cocycles in degree hi).  Nothing outside lo-1..hi+1 exists.
class CochainComplex {
 public:
  CochainComplex() = default;
  // dims has hi-lo+3 entries (degrees lo-1..hi+1); d has hi-lo+2 blocks
  // (d_{lo-1}..d_hi).  Checks shapes and d∘d = 0.
  CochainComplex(const Field& F, int lo, int hi, std::vector<int> dims, std::vector<Mat> d);

  const Field& field() const { return F_; }
  int lo() const { return lo_; }
  int hi() const { return hi_; }
  int dim(int n) const;
  // d_n : C^n -> C^{n+1}, for lo-1 <= n <= hi.
  const Mat& d(int n) const { return d_.at(n - lo_ + 1); }
  const SpMat& d_sparse(int n) const { return ds_.at(n - lo_ + 1); }

 private:
  Field F_;
  int lo_ = 0, hi_ = -1;
  std::vector<int> dims_;
  std::vector<Mat> d_;
  std::vector<SpMat> ds_;
};

// Ranks only: dim H^n = dim C^n - rank d_n - rank d_{n-1}, n in lo..hi.
std::vector<int> cohomology_dims(const CochainComplex& C);

struct HomotopyRetract {
  CochainComplex C;
  std::vector<int> hdims;  // degrees lo..hi
  GradedMap i;             // H^n -> C^n
  GradedMap p;             // C^n -> H^n
  GradedMap h;             // C^n -> C^{n-1}, n = lo..hi+1 (top block is partial)
  std::uint64_t seed = 0;

  int lo() const { return C.lo(); }
  int hi() const { return C.hi(); }
  int hdim(int n) const { return (n < lo() || n > hi()) ? 0 : hdims[n - lo()]; }
};

// Splits C^n = B^n ⊕ H̃^n ⊕ L^n in every carried degree (complements chosen
// by linffp::complement with a seed derived from `seed`), and returns the
// associated retract.  The top homotopy h^{hi+1} is defined on all of
// C^{hi+1} using a coordinate complement of B^{hi+1}, so identities whose
// output lies in degrees <= hi hold exactly.
HomotopyRetract cohomology_with_retract(const CochainComplex& C, std::uint64_t seed = 0);

struct CheckItem {
  std::string name;
  int degree;
  bool ok;
};

struct RetractReport {
  std::vector<CheckItem> items;
  bool ok() const;
};

RetractReport check_retract(const HomotopyRetract& r);

}  // namespace ainf
