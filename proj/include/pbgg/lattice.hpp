#pragma once

// Exact root-system and Weyl-group arithmetic for the classical series.
//
// Conventions, fixed once and used everywhere:
//  * Simple roots follow the Bourbaki numbering; the Cartan matrix is
//    A(i,j) = <alpha_i, alpha_j^vee>, so row i of A is alpha_i written in
//    fundamental-weight coordinates.
//  * Weights are column vectors of exact rationals in the fundamental-weight
//    basis; roots are integer vectors in the simple-root basis.
//  * The invariant form on weight space is x^T (D A)^{-1} y, where D is the
//    diagonal symmetrizer with d_i A(i,j) = d_j A(j,i).  Pairing a weight x
//    against a root with simple-root coordinates r is then sum_i x_i r_i / d_i.
//  * A Weyl element is identified by its integer action matrix on
//    fundamental-weight coordinates; reduced words are recomputed as the
//    lexicographically least one, so printed output is stable.

#include "pbgg/types.hpp"

#include <map>
#include <string>
#include <vector>

namespace pbgg {

enum class Series { A, B, C, D };

struct LieTypeRank {
  Series series;
  int rank;
};

/// Parses an algebra label such as "C3" or "A12".
LieTypeRank parse_algebra(const std::string& name);
std::string algebra_name(const LieTypeRank& type);

struct RootSystem {
  LieTypeRank type;
  IntMatrix cartan;                      // row i = alpha_i in omega-coordinates
  IntVector symmetrizer;                 // d_i A(i,j) = d_j A(j,i), gcd 1
  std::vector<IntVector> positive_roots; // simple-root coords, height-then-lex
  RatVector rho;                         // (1,...,1)

  // Derived, cached at construction.
  RatMatrix inv_cartan_t;  // (A^T)^{-1}: omega-coords -> simple-root coords
  RatMatrix form;          // Gram matrix (D A)^{-1} of the invariant form

  int rank() const { return static_cast<int>(cartan.rows()); }

  /// Index into positive_roots, or -1 when the vector is not a positive root.
  int root_index(const IntVector& coords) const;

  /// |W| from the closed-form count for the series.
  BigInt weyl_order() const;

 private:
  friend RootSystem build_root_system(LieTypeRank);
  std::map<std::vector<IntScalar>, int> root_lookup_;
};

RootSystem build_root_system(LieTypeRank type);

/// Weyl-invariant symmetric positive-definite form on weight space.
Rational inner_product(const RootSystem& rs, const RatVector& x, const RatVector& y);

/// Coordinates c with lambda = sum_i c_i alpha_i (exact solve against A^T).
RatVector weight_to_root_basis(const RootSystem& rs, const RatVector& lambda);

/// The weight sum_i r_i alpha_i in omega-coordinates (A^T r).
RatVector root_to_weight_basis(const RootSystem& rs, const IntVector& root);

/// <x, beta> for a root beta in simple-root coordinates: sum_i x_i r_i / d_i.
Rational pair_with_root(const RootSystem& rs, const RatVector& x, const IntVector& root);

/// Height sum of the simple-root coordinates.
IntScalar root_height(const IntVector& root);

struct WeylElement {
  std::vector<int> word;          // 1-based, lexicographically least reduced
  IntMatrix action;               // on omega-coordinates
  int length = 0;
  std::vector<int> inversion_set; // sorted indices into rs.positive_roots

  bool operator==(const WeylElement& other) const { return action == other.action; }
};

/// Action matrix of the simple reflection s_i (1-based).
IntMatrix simple_reflection_matrix(const RootSystem& rs, int i);

/// Action matrix of the reflection in an arbitrary positive root.
IntMatrix reflection_matrix(const RootSystem& rs, const IntVector& root);

/// Action of a Weyl matrix on simple-root coordinates: (A^T)^{-1} M A^T.
IntMatrix action_on_roots(const RootSystem& rs, const IntMatrix& action);

/// Canonicalizes an action matrix into a WeylElement (word, length, inversions).
WeylElement element_from_action(const RootSystem& rs, const IntMatrix& action);

/// Composes simple reflections; out-of-range indices are an input error.
WeylElement element_from_word(const RootSystem& rs, const std::vector<int>& word);

WeylElement identity_element(const RootSystem& rs);
WeylElement compose(const RootSystem& rs, const WeylElement& a, const WeylElement& b);

/// Linear action w(lambda).
RatVector weyl_act(const WeylElement& w, const RatVector& lambda);

/// Affine action w . lambda = w(lambda + rho) - rho.
RatVector affine_act(const RootSystem& rs, const WeylElement& w, const RatVector& lambda);

/// Dominant representative of the Weyl orbit of mu.
RatVector dominant_representative(const RootSystem& rs, RatVector mu);

}  // namespace pbgg
