#pragma once
// Seeded random dg-algebras for exercising the transfer gates.
//
// A case is End^{>=1}(V) for a random graded V (degrees 0..3) with a random
// square-zero differential ∂: positive-degree endomorphisms, product =
// composition, d = [∂, -].  Cases are rejected until dim <= max_dim.

#include "ainf/transfer.hpp"

namespace ainf {

struct FuzzCase {
  std::uint64_t seed = 0;
  Int p = 2;
  std::vector<int> vdims;  // dim V^0..V^3
  DgAlgebra dga;
};

FuzzCase random_dga(std::uint64_t seed, int max_dim = 6);

struct FuzzResult {
  std::uint64_t seed = 0;
  Int p = 2;
  std::vector<int> vdims, dims, hdims;
  bool dga_ok = false;
  bool retract_ok = false;
  TransferReport transfer;
  bool ok() const { return dga_ok && retract_ok && transfer.ok(); }
};

FuzzResult run_case(const FuzzCase& c, int N);

struct FuzzReport {
  std::vector<FuzzResult> cases;
  int violations() const;
};

// Case k uses seed derived from (seed, k); results do not depend on `threads`.
FuzzReport fuzz(std::uint64_t seed, int count, int N = 4, int threads = 1);

}  // namespace ainf
