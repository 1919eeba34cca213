#pragma once

// Assembly of (relative) BGG diagram shapes: one node per homology entry,
// one edge per Hasse cover, edge labels carrying the weighted order of the
// corresponding operator, plus the integrability verdict of the center check.

#include "pbgg/kostant.hpp"

#include <optional>
#include <string>

namespace pbgg {

struct BGGNode {
  int degree = 0;
  RatVector weight;
  BigInt dim;
  std::vector<int> word;
};

struct BGGEdge {
  int from = 0;
  int to = 0;
  long long order = 0;  // drop of weighted homogeneity across the edge
  IntVector root;       // reflecting positive root, simple-root coordinates
};

struct BGGDiagram {
  LieTypeRank algebra;
  std::vector<int> crossed;    // q-crossed set for relative diagrams
  std::vector<int> crossed_p;  // only for relative diagrams
  bool relative = false;
  RatVector lambda;
  std::optional<CenterCharacter> center;  // absent when no group was selected
  std::vector<BGGNode> nodes;             // ordered by (degree, Hasse order)
  std::vector<BGGEdge> edges;             // ordered by (from, to)

  std::vector<int> degree_histogram() const;
};

/// Weighted order of the operator along a cover pair (w, w'): the grading
/// value of affine(w, lambda) - affine(w', lambda).  Errors on non-covers.
long long operator_order(const Parabolic& p, const RatVector& lambda,
                         const WeylElement& from, const WeylElement& to);

/// Absolute diagram: nodes from homology_weights, edges from Hasse covers,
/// integrability from the optional center character.
BGGDiagram build_bgg(const Parabolic& p, const RatVector& lambda,
                     std::optional<GroupTag> tag = std::nullopt, int modulus = 0);

/// Relative diagram for nested parabolics p inside q.
BGGDiagram build_relative_bgg(const Parabolic& p, const Parabolic& q,
                              const RatVector& lambda);

struct PresetData {
  Parabolic p;
  std::optional<Parabolic> q;  // present for relative presets
  RatVector lambda;
  std::optional<GroupTag> tag;
  int modulus = 0;
};

/// Assembles the inputs for the three built-in families:
///   ricci-type(n, k, levi coefficients...)        : C_{n+1}, crossed {1}
///   bilagrangean(n, k, l, levi coefficients...)   : A_{n+1}, crossed {1, n+1}
///   relative-parakahler(n, k, a_1, levi coeffs...): A_{n+1}, {1} inside {1, n+1}
PresetData preset(const std::string& name, const std::vector<Rational>& params);

BGGDiagram build_preset(const PresetData& data);

}  // namespace pbgg
