#pragma once

// Homology weights of the nilradical with coefficients in an irreducible
// module, per degree: degree k collects the affine images of the highest
// weight under the length-k elements of the (relative) Hasse diagram, each
// paired with its reduced word and Levi dimension.

#include "pbgg/parabolic.hpp"
#include "pbgg/repinfo.hpp"

#include <vector>

namespace pbgg {

struct HomologyEntry {
  RatVector weight;
  std::vector<int> word;
  BigInt dim;
};

struct HomologyTable {
  // degrees[k] lists the entries of homology degree k, in Hasse order.
  std::vector<std::vector<HomologyEntry>> degrees;

  std::size_t entry_count() const;
};

/// H_k(p_+, V(lambda)) for g-dominant-integral lambda.
HomologyTable homology_weights(const Parabolic& p, const RatVector& lambda);

/// H_k(q_+/p_+, V) for nested parabolics p inside q.  lambda needs
/// non-negative integer coefficients away from p.crossed; coefficients at
/// p-crossed nodes may be arbitrary rationals.  The full rho-shift is used.
HomologyTable relative_homology_weights(const Parabolic& p, const Parabolic& q,
                                        const RatVector& lambda);

}  // namespace pbgg
