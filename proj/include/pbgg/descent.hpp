#pragma once

// Dimension bookkeeping for the cohomology of a descended complex on a
// compact quotient: the input is the de Rham Betti vector of the base, the
// ranks of cup product with the fixed degree-2 class, and the dimension w1
// of the flat coefficient block; the output is the graded dimension vector
// of the complex, read off a long exact sequence
//
//   ... -> K^k -> A^k -> C^{k-1} -> K^{k+1} -> ...
//
// where K^j and C^j both have dimension b_j * w1 and each connecting map has
// rank w1 * r_j.

#include "pbgg/types.hpp"

#include <vector>

namespace pbgg {

struct CohomologyProfile {
  int dim_m = 0;                          // even, = 2n
  std::vector<long long> betti;           // b_0 .. b_{2n}
  std::vector<long long> lefschetz_ranks; // r_0 .. r_{2n-2}
  long long w1 = 0;

  long long b(int k) const;  // zero out of range
  long long r(int k) const;  // zero out of range
};

/// Checks ranges and r_j <= min(b_j, b_{j+2}); throws input_error otherwise.
void validate_profile(const CohomologyProfile& profile);

struct CohomologyResult {
  std::vector<long long> dims;  // degrees 0 .. 2n+1
};

/// Closed-form exactness bookkeeping:
/// dims[k] = w1 (b_k - r_{k-2}) + w1 (b_{k-1} - r_{k-1}).
CohomologyResult descended_cohomology(const CohomologyProfile& profile);

/// Independent oracle: materializes every connecting map as an explicit
/// rational matrix of the prescribed rank and measures cokernel and kernel
/// dimensions by row reduction.
CohomologyResult les_oracle(const CohomologyProfile& profile, unsigned seed);

/// Betti numbers of complex projective n-space with the full hard-Lefschetz
/// rank pattern; n >= 2.
CohomologyProfile cpn_profile(int n, long long w1);

}  // namespace pbgg
