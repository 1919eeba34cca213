#include "pbgg/parabolic.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace pbgg {

namespace {

constexpr std::size_t kOrbitGuard = 1000000;

std::vector<IntScalar> matrix_key(const IntMatrix& m) {
  return std::vector<IntScalar>(m.data(), m.data() + m.size());
}

std::vector<IntScalar> vector_key(const RatVector& v) {
  // Orbit points of rho under W are integral.
  std::vector<IntScalar> key(v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) key[i] = rational_to_int(v[i]);
  return key;
}

bool subset_of(const std::vector<int>& inner, const std::vector<int>& outer) {
  return std::includes(outer.begin(), outer.end(), inner.begin(), inner.end());
}

bool word_less(const WeylElement& a, const WeylElement& b) {
  if (a.length != b.length) return a.length < b.length;
  return a.word < b.word;
}

/// Roots of rs supported entirely on the given simple nodes.
std::vector<int> roots_supported_on(const RootSystem& rs, const std::vector<int>& simples) {
  std::vector<bool> allowed(rs.rank() + 1, false);
  for (int i : simples) allowed[i] = true;
  std::vector<int> out;
  for (std::size_t t = 0; t < rs.positive_roots.size(); ++t) {
    const IntVector& r = rs.positive_roots[t];
    bool ok = true;
    for (int i = 0; i < rs.rank(); ++i)
      if (r[i] != 0 && !allowed[i + 1]) { ok = false; break; }
    if (ok) out.push_back(static_cast<int>(t));
  }
  return out;
}

/// Shared assembly: sorts elements, then enumerates all cover edges
/// (u, s_beta u, beta) with beta drawn from the subsystem roots.
HasseDiagram assemble_diagram(const RootSystem& rs, std::vector<int> simples,
                              std::vector<int> crossed,
                              std::vector<WeylElement> elements,
                              const std::vector<int>& subsystem_roots) {
  HasseDiagram d;
  d.rs = rs;
  d.simples = std::move(simples);
  d.crossed = std::move(crossed);
  std::sort(elements.begin(), elements.end(), word_less);
  d.elements = std::move(elements);

  std::map<std::vector<IntScalar>, int> index;
  for (std::size_t i = 0; i < d.elements.size(); ++i)
    index[matrix_key(d.elements[i].action)] = static_cast<int>(i);

  std::vector<IntMatrix> reflections;
  reflections.reserve(subsystem_roots.size());
  for (int t : subsystem_roots)
    reflections.push_back(reflection_matrix(rs, rs.positive_roots[static_cast<std::size_t>(t)]));

  for (std::size_t u = 0; u < d.elements.size(); ++u) {
    for (std::size_t s = 0; s < subsystem_roots.size(); ++s) {
      auto it = index.find(matrix_key(reflections[s] * d.elements[u].action));
      if (it == index.end()) continue;
      const int v = it->second;
      if (d.elements[v].length == d.elements[u].length + 1)
        d.edges.push_back({static_cast<int>(u), v, subsystem_roots[s]});
    }
  }
  std::sort(d.edges.begin(), d.edges.end(), [](const auto& a, const auto& b) {
    return std::tie(a.from, a.to) < std::tie(b.from, b.to);
  });
  return d;
}

/// { w in W_simples : inversions(w) within allowed_roots } by BFS over covers.
HasseDiagram hasse_over(const RootSystem& rs, const std::vector<int>& simples,
                        const std::vector<int>& crossed,
                        const std::vector<int>& allowed_roots) {
  const std::vector<int> subsystem = roots_supported_on(rs, simples);
  std::vector<int> allowed_sorted = allowed_roots;
  std::sort(allowed_sorted.begin(), allowed_sorted.end());

  std::vector<IntMatrix> reflections;
  reflections.reserve(subsystem.size());
  for (int t : subsystem)
    reflections.push_back(reflection_matrix(rs, rs.positive_roots[static_cast<std::size_t>(t)]));

  // Layered BFS: the lengths of accepted elements grow by exactly one per
  // layer, and every member of length l+1 covers some member of length l,
  // so no element is missed.  Only accepted elements enter the seen set;
  // a candidate rejected at one layer may be a genuine cover image later.
  std::set<std::vector<IntScalar>> seen;
  std::vector<WeylElement> members;
  std::vector<WeylElement> frontier = {identity_element(rs)};
  seen.insert(matrix_key(frontier.front().action));
  while (!frontier.empty()) {
    std::vector<WeylElement> next;
    for (const WeylElement& w : frontier) {
      for (std::size_t s = 0; s < subsystem.size(); ++s) {
        const IntMatrix candidate = reflections[s] * w.action;
        auto key = matrix_key(candidate);
        if (seen.count(key)) continue;
        WeylElement elem = element_from_action(rs, candidate);
        if (elem.length != w.length + 1) continue;
        if (!subset_of(elem.inversion_set, allowed_sorted)) continue;
        seen.insert(std::move(key));
        next.push_back(std::move(elem));
      }
    }
    members.insert(members.end(), frontier.begin(), frontier.end());
    frontier = std::move(next);
  }
  return assemble_diagram(rs, simples, crossed, std::move(members), subsystem);
}

/// All elements of the subgroup generated by the given simple reflections,
/// via the orbit of rho (rho is regular, so the orbit map is injective).
std::vector<WeylElement> enumerate_subgroup(const RootSystem& rs,
                                            const std::vector<int>& simples,
                                            std::size_t guard) {
  std::map<std::vector<IntScalar>, IntMatrix> orbit;
  std::vector<std::pair<RatVector, IntMatrix>> frontier;
  const IntMatrix id = IntMatrix::Identity(rs.rank(), rs.rank());
  orbit[vector_key(rs.rho)] = id;
  frontier.push_back({rs.rho, id});
  while (!frontier.empty()) {
    std::vector<std::pair<RatVector, IntMatrix>> next;
    for (const auto& [mu, m] : frontier) {
      for (int i : simples) {
        const IntMatrix si = simple_reflection_matrix(rs, i);
        RatVector image = RatVector::Zero(rs.rank());
        for (int r = 0; r < rs.rank(); ++r)
          for (int c = 0; c < rs.rank(); ++c) image[r] += Rational(si(r, c)) * mu[c];
        auto key = vector_key(image);
        if (orbit.count(key)) continue;
        IntMatrix composed = si * m;
        orbit[key] = composed;
        next.push_back({image, composed});
        if (orbit.size() > guard)
          throw resource_error("Weyl group too large to enumerate");
      }
    }
    frontier = std::move(next);
  }
  std::vector<WeylElement> out;
  out.reserve(orbit.size());
  for (const auto& [key, m] : orbit) out.push_back(element_from_action(rs, m));
  return out;
}

}  // namespace

Rational Parabolic::grading_value(const RatVector& weight) const {
  if (weight.size() != rs.rank()) throw input_error("weight length does not match the rank");
  return grading_functional.dot(weight);
}

IntScalar Parabolic::grading_value_root(const IntVector& root) const {
  IntScalar sum = 0;
  for (int i : crossed) sum += root[i - 1];
  return sum;
}

Parabolic make_parabolic(const RootSystem& rs, std::vector<int> crossed) {
  std::sort(crossed.begin(), crossed.end());
  crossed.erase(std::unique(crossed.begin(), crossed.end()), crossed.end());
  if (crossed.empty())
    throw input_error("crossed node set must be non-empty (cross every node for the Borel)");
  for (int i : crossed)
    if (i < 1 || i > rs.rank())
      throw input_error("crossed node " + std::to_string(i) + " out of range");

  Parabolic p;
  p.rs = rs;
  p.crossed = std::move(crossed);
  for (int i = 1; i <= rs.rank(); ++i)
    if (!std::binary_search(p.crossed.begin(), p.crossed.end(), i))
      p.levi_simples.push_back(i);

  for (std::size_t t = 0; t < rs.positive_roots.size(); ++t)
    if (p.grading_value_root(rs.positive_roots[t]) > 0)
      p.p_plus_roots.push_back(static_cast<int>(t));

  RatVector indicator = RatVector::Zero(rs.rank());
  for (int i : p.crossed) indicator[i - 1] = 1;
  p.grading_functional = rs.inv_cartan_t.transpose() * indicator;
  return p;
}

bool is_contact_grading(const Parabolic& p) {
  IntScalar top = 0;
  int top_count = 0;
  for (int t : p.p_plus_roots) {
    const IntScalar e = p.grading_value_root(p.rs.positive_roots[t]);
    if (e > top) {
      top = e;
      top_count = 1;
    } else if (e == top) {
      ++top_count;
    }
  }
  return top == 2 && top_count == 1;
}

int HasseDiagram::max_length() const {
  return elements.empty() ? 0 : elements.back().length;
}

std::vector<int> HasseDiagram::length_histogram() const {
  std::vector<int> counts(static_cast<std::size_t>(max_length()) + 1, 0);
  for (const WeylElement& w : elements) ++counts[static_cast<std::size_t>(w.length)];
  return counts;
}

std::vector<int> HasseDiagram::ids_of_length(int length) const {
  std::vector<int> out;
  for (std::size_t i = 0; i < elements.size(); ++i)
    if (elements[i].length == length) out.push_back(static_cast<int>(i));
  return out;
}

HasseDiagram hasse_diagram(const Parabolic& p) {
  std::vector<int> all_simples(p.rs.rank());
  for (int i = 0; i < p.rs.rank(); ++i) all_simples[static_cast<std::size_t>(i)] = i + 1;
  return hasse_over(p.rs, all_simples, p.crossed, p.p_plus_roots);
}

HasseDiagram brute_force_hasse(const Parabolic& p) {
  if (p.rs.weyl_order() > kOrbitGuard)
    throw resource_error("Weyl group order exceeds the enumeration guard");
  std::vector<int> all_simples(p.rs.rank());
  for (int i = 0; i < p.rs.rank(); ++i) all_simples[static_cast<std::size_t>(i)] = i + 1;

  std::vector<int> allowed_sorted = p.p_plus_roots;
  std::sort(allowed_sorted.begin(), allowed_sorted.end());
  std::vector<WeylElement> members;
  for (WeylElement& w : enumerate_subgroup(p.rs, all_simples, kOrbitGuard))
    if (subset_of(w.inversion_set, allowed_sorted)) members.push_back(std::move(w));
  return assemble_diagram(p.rs, all_simples, p.crossed, std::move(members),
                          roots_supported_on(p.rs, all_simples));
}

HasseDiagram relative_hasse(const Parabolic& p, const Parabolic& q) {
  if (algebra_name(p.rs.type) != algebra_name(q.rs.type))
    throw input_error("relative Hasse diagram needs parabolics of one root system");
  if (p.crossed == q.crossed || !subset_of(p.crossed, q.crossed))
    throw input_error("relative Hasse diagram needs p.crossed strictly inside q.crossed");

  std::vector<int> rel_crossed;
  std::set_difference(q.crossed.begin(), q.crossed.end(), p.crossed.begin(),
                      p.crossed.end(), std::back_inserter(rel_crossed));

  // Positive roots of the Levi of p with weight on a newly crossed node.
  std::vector<int> allowed;
  for (int t : roots_supported_on(p.rs, p.levi_simples)) {
    const IntVector& r = p.rs.positive_roots[t];
    IntScalar e = 0;
    for (int i : rel_crossed) e += r[i - 1];
    if (e > 0) allowed.push_back(t);
  }
  return hasse_over(p.rs, p.levi_simples, rel_crossed, allowed);
}

std::size_t subgroup_order(const RootSystem& rs, const std::vector<int>& simples) {
  if (simples.empty()) return 1;
  std::map<std::vector<IntScalar>, bool> orbit;
  std::vector<RatVector> frontier = {rs.rho};
  orbit[vector_key(rs.rho)] = true;
  while (!frontier.empty()) {
    std::vector<RatVector> next;
    for (const RatVector& mu : frontier) {
      for (int i : simples) {
        RatVector image = mu;
        const Rational c = mu[i - 1];
        for (int j = 0; j < rs.rank(); ++j) image[j] -= c * Rational(rs.cartan(i - 1, j));
        auto key = vector_key(image);
        if (orbit.count(key)) continue;
        orbit[key] = true;
        next.push_back(std::move(image));
        if (orbit.size() > kOrbitGuard)
          throw resource_error("Weyl subgroup too large to enumerate");
      }
    }
    frontier = std::move(next);
  }
  return orbit.size();
}

}  // namespace pbgg
