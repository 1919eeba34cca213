#pragma once

// Representation-theoretic quantities over the complexification: Weyl and
// Levi dimension formulas, Freudenthal weight multiplicities, diagonal
// kernel dimensions of Cartan elements, center characters, Cartan products.

#include "pbgg/parabolic.hpp"

#include <map>
#include <vector>

namespace pbgg {

/// Weyl dimension formula prod_{alpha>0} <lambda+rho,alpha>/<rho,alpha>.
BigInt weyl_dim(const RootSystem& rs, const RatVector& lambda);

/// Dimension of the irreducible Levi representation with extremal weight mu;
/// coefficients at crossed nodes are ignored by the Levi pairing.
BigInt levi_dim(const Parabolic& p, const RatVector& mu);

struct MultiplicityTable {
  // All weights of the irreducible module, in omega-coordinates (integral
  // because the highest weight is), each with its positive multiplicity.
  std::map<std::vector<IntScalar>, BigInt> weight_to_mult;

  BigInt total() const;
};

/// Freudenthal recursion, guarded at weyl_dim(lambda) <= 1e5.  The result is
/// independent of the scale of the invariant form.
MultiplicityTable freudenthal(const RootSystem& rs, const RatVector& lambda);

/// A semisimple element of the Cartan, given by the rational pairing it
/// induces on omega-coordinates.
struct CartanElement {
  RatVector pairing;
  Rational value(const RatVector& mu) const;
};

/// dim { v : X.v = 0 } = sum of multiplicities over weights killed by X.
BigInt kernel_dim(const RootSystem& rs, const RatVector& lambda, const CartanElement& x);

enum class GroupTag { AdjointAEven, AdjointC, SuCenter };

GroupTag parse_group_tag(const std::string& text, int& modulus);
std::string group_tag_name(GroupTag tag, int modulus);

struct CenterCharacter {
  long residue = 0;
  long modulus = 1;
  bool integrable = true;
};

/// Character of the center of the chosen group on the extremal weight line.
/// adjoint-C / adjoint-A-even: parity of the odd-index coefficient sum;
/// su-center(m): sum of i * a_i mod m, with m = rank + 1.
CenterCharacter center_character(const RootSystem& rs, const RatVector& lambda,
                                 GroupTag tag, int modulus = 0);

/// Highest weights add under the Cartan product.
RatVector cartan_product(const RatVector& lambda, const RatVector& mu);

}  // namespace pbgg
