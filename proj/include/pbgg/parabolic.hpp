#pragma once

// Parabolic subalgebras through crossed Dynkin nodes, their gradings, the
// Hasse diagram W^p of minimal coset representatives, and relative Hasse
// diagrams for nested parabolics.
//
// Membership criterion: w lies in W^p iff every inversion of w (positive root
// alpha with w^{-1}(alpha) negative) has a positive coefficient on a crossed
// node.  Under this convention the affine action carries dominant weights to
// Levi-dominant ones.  Cover edges use left multiplication: to = s_beta from.

#include "pbgg/lattice.hpp"

#include <vector>

namespace pbgg {

struct Parabolic {
  RootSystem rs;
  std::vector<int> crossed;       // 1-based node indices, sorted
  std::vector<int> levi_simples;  // complement, sorted
  std::vector<int> p_plus_roots;  // indices into rs.positive_roots
  RatVector grading_functional;   // E(lambda) = grading_functional . lambda

  /// E evaluated on a weight in omega-coordinates.
  Rational grading_value(const RatVector& weight) const;
  /// E evaluated on a root in simple-root coordinates (sum of crossed coords).
  IntScalar grading_value_root(const IntVector& root) const;
};

Parabolic make_parabolic(const RootSystem& rs, std::vector<int> crossed);

/// True iff the grading is a contact grading: E-values reach 2 and exactly
/// one positive root sits in the top slot.
bool is_contact_grading(const Parabolic& p);

struct HasseDiagram {
  RootSystem rs;
  std::vector<int> simples;  // generator subset defining the acting group
  std::vector<int> crossed;  // crossed nodes inside that subset

  std::vector<WeylElement> elements;  // sorted by (length, word)
  struct Edge {
    int from = 0;
    int to = 0;
    int root = 0;  // index into rs.positive_roots; to = s_root from
  };
  std::vector<Edge> edges;  // sorted by (from, to)

  int max_length() const;
  std::vector<int> length_histogram() const;
  /// Flat ids of the elements with the given length.
  std::vector<int> ids_of_length(int length) const;
};

/// W^p by breadth-first search over Bruhat covers starting at the identity.
HasseDiagram hasse_diagram(const Parabolic& p);

/// Independent oracle: enumerates all of W as the orbit of rho under simple
/// reflections and filters by the inversion criterion.  Guarded at |W| <= 1e6.
HasseDiagram brute_force_hasse(const Parabolic& p);

/// Hasse diagram of the parabolic q cap Levi(p) inside the Levi of p, with
/// elements embedded as Weyl elements of the ambient group.  Requires
/// p.crossed to be a proper subset of q.crossed.
HasseDiagram relative_hasse(const Parabolic& p, const Parabolic& q);

/// Order of the subgroup generated by the listed simple reflections,
/// computed by enumerating the orbit of rho (guarded at 1e6).
std::size_t subgroup_order(const RootSystem& rs, const std::vector<int>& simples);

}  // namespace pbgg
