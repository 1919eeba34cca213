#include "pbgg/bgg.hpp"

#include <algorithm>

namespace pbgg {

namespace {

long long order_across(const Parabolic& grading, const RootSystem& rs,
                       const RatVector& lambda, const WeylElement& from,
                       const WeylElement& to) {
  const RatVector drop = affine_act(rs, from, lambda) - affine_act(rs, to, lambda);
  const Rational value = grading.grading_value(drop);
  if (!is_integer(value) || value <= 0)
    throw std::logic_error("weighted order is not a positive integer");
  return rational_to_int(value);
}

BGGDiagram assemble(const Parabolic& dims_parabolic, const Parabolic& grading,
                    const HasseDiagram& h, const RatVector& lambda) {
  BGGDiagram d;
  d.algebra = h.rs.type;
  d.lambda = lambda;

  // Hasse elements are sorted by (length, word); nodes mirror that order, so
  // node ids coincide with Hasse element ids.
  for (const WeylElement& w : h.elements) {
    BGGNode node;
    node.degree = w.length;
    node.weight = affine_act(h.rs, w, lambda);
    node.word = w.word;
    node.dim = levi_dim(dims_parabolic, node.weight);
    d.nodes.push_back(std::move(node));
  }
  for (const HasseDiagram::Edge& e : h.edges) {
    BGGEdge edge;
    edge.from = e.from;
    edge.to = e.to;
    edge.root = h.rs.positive_roots[static_cast<std::size_t>(e.root)];
    edge.order = order_across(grading, h.rs, lambda, h.elements[static_cast<std::size_t>(e.from)],
                              h.elements[static_cast<std::size_t>(e.to)]);
    d.edges.push_back(std::move(edge));
  }
  return d;
}

void require_length(const RatVector& lambda, const RootSystem& rs) {
  if (lambda.size() != rs.rank())
    throw input_error("weight length does not match the rank");
}

long require_small_non_negative_int(const Rational& q, const char* what) {
  if (!is_integer(q) || q < 0)
    throw input_error(std::string(what) + " must be a non-negative integer");
  return rational_to_int(q);
}

}  // namespace

std::vector<int> BGGDiagram::degree_histogram() const {
  std::vector<int> counts;
  for (const BGGNode& n : nodes) {
    if (static_cast<std::size_t>(n.degree) >= counts.size())
      counts.resize(static_cast<std::size_t>(n.degree) + 1, 0);
    ++counts[static_cast<std::size_t>(n.degree)];
  }
  return counts;
}

long long operator_order(const Parabolic& p, const RatVector& lambda,
                         const WeylElement& from, const WeylElement& to) {
  require_length(lambda, p.rs);
  if (to.length != from.length + 1)
    throw input_error("operator_order needs a cover pair (length difference one)");
  // Reject pairs not related by a reflection in a positive root.
  bool is_reflection = false;
  for (const IntVector& beta : p.rs.positive_roots)
    if (reflection_matrix(p.rs, beta) * from.action == to.action) {
      is_reflection = true;
      break;
    }
  if (!is_reflection) throw input_error("operator_order needs a cover pair");
  return order_across(p, p.rs, lambda, from, to);
}

BGGDiagram build_bgg(const Parabolic& p, const RatVector& lambda,
                     std::optional<GroupTag> tag, int modulus) {
  require_length(lambda, p.rs);
  for (Eigen::Index i = 0; i < lambda.size(); ++i)
    if (!is_integer(lambda[i]) || lambda[i] < 0)
      throw input_error("BGG diagram needs a dominant integral weight");

  BGGDiagram d = assemble(p, p, hasse_diagram(p), lambda);
  d.crossed = p.crossed;
  if (tag) d.center = center_character(p.rs, lambda, *tag, modulus);
  return d;
}

BGGDiagram build_relative_bgg(const Parabolic& p, const Parabolic& q,
                              const RatVector& lambda) {
  require_length(lambda, p.rs);
  for (int i : p.levi_simples) {
    const Rational& c = lambda[i - 1];
    if (!is_integer(c) || c < 0)
      throw input_error("relative BGG weight must be dominant integral away from "
                        "the crossed nodes of p");
  }
  // The grading of q evaluates the homogeneity drop; on Levi-of-p weight
  // differences it agrees with the relative grading.
  BGGDiagram d = assemble(q, q, relative_hasse(p, q), lambda);
  d.relative = true;
  d.crossed = q.crossed;
  d.crossed_p = p.crossed;
  return d;
}

PresetData preset(const std::string& name, const std::vector<Rational>& params) {
  auto levi_coeffs = [&](std::size_t first, int count) {
    std::vector<long> out(static_cast<std::size_t>(count), 0);
    if (params.size() - first > static_cast<std::size_t>(count))
      throw input_error("too many Levi coefficients for preset '" + name + "'");
    for (std::size_t i = first; i < params.size(); ++i)
      out[i - first] = require_small_non_negative_int(params[i], "Levi coefficient");
    return out;
  };

  if (name == "ricci-type") {
    if (params.size() < 2) throw input_error("ricci-type needs parameters n,k,...");
    const long n = require_small_non_negative_int(params[0], "n");
    const long k = require_small_non_negative_int(params[1], "k");
    if (n < 2) throw input_error("ricci-type needs n >= 2");
    const RootSystem rs = build_root_system({Series::C, static_cast<int>(n) + 1});
    PresetData data{make_parabolic(rs, {1}), std::nullopt, RatVector::Zero(rs.rank()),
                    GroupTag::AdjointC, 0};
    data.lambda[0] = Rational(k);
    const auto coeffs = levi_coeffs(2, static_cast<int>(n));
    for (std::size_t i = 0; i < coeffs.size(); ++i)
      data.lambda[static_cast<Eigen::Index>(i) + 1] = Rational(coeffs[i]);
    return data;
  }

  if (name == "bilagrangean") {
    if (params.size() < 3) throw input_error("bilagrangean needs parameters n,k,l,...");
    const long n = require_small_non_negative_int(params[0], "n");
    const long k = require_small_non_negative_int(params[1], "k");
    const long l = require_small_non_negative_int(params[2], "l");
    if (n < 3) throw input_error("bilagrangean needs n >= 3 (dimension 2n >= 6)");
    const RootSystem rs = build_root_system({Series::A, static_cast<int>(n) + 1});
    PresetData data{make_parabolic(rs, {1, static_cast<int>(n) + 1}), std::nullopt,
                    RatVector::Zero(rs.rank()), std::nullopt, 0};
    data.lambda[0] = Rational(k);
    data.lambda[rs.rank() - 1] = Rational(l);
    const auto coeffs = levi_coeffs(3, static_cast<int>(n) - 1);
    for (std::size_t i = 0; i < coeffs.size(); ++i)
      data.lambda[static_cast<Eigen::Index>(i) + 1] = Rational(coeffs[i]);
    // The parity condition only bites when the underlying special linear
    // group has even size, i.e. for even n; otherwise every weight works.
    if (n % 2 == 0) data.tag = GroupTag::AdjointAEven;
    return data;
  }

  if (name == "relative-parakahler") {
    if (params.size() < 2)
      throw input_error("relative-parakahler needs parameters n,k,a1,...");
    const long n = require_small_non_negative_int(params[0], "n");
    const long k = require_small_non_negative_int(params[1], "k");
    if (n < 2) throw input_error("relative-parakahler needs n >= 2");
    const RootSystem rs = build_root_system({Series::A, static_cast<int>(n) + 1});
    PresetData data{make_parabolic(rs, {1}),
                    make_parabolic(rs, {1, static_cast<int>(n) + 1}),
                    RatVector::Zero(rs.rank()), std::nullopt, 0};
    data.lambda[rs.rank() - 1] = Rational(k);
    if (params.size() >= 3) data.lambda[0] = params[2];  // a_1 may be rational
    const auto coeffs = levi_coeffs(3, static_cast<int>(n) - 1);
    for (std::size_t i = 0; i < coeffs.size(); ++i)
      data.lambda[static_cast<Eigen::Index>(i) + 1] = Rational(coeffs[i]);
    return data;
  }

  throw input_error("unknown preset '" + name + "'");
}

BGGDiagram build_preset(const PresetData& data) {
  if (data.q) return build_relative_bgg(data.p, *data.q, data.lambda);
  return build_bgg(data.p, data.lambda, data.tag, data.modulus);
}

}  // namespace pbgg
