#include "pbgg/kostant.hpp"

namespace pbgg {

namespace {

HomologyTable table_from_diagram(const Parabolic& dims_parabolic, const HasseDiagram& h,
                                 const RatVector& lambda) {
  HomologyTable table;
  table.degrees.resize(static_cast<std::size_t>(h.max_length()) + 1);
  for (const WeylElement& w : h.elements) {
    HomologyEntry entry;
    entry.weight = affine_act(h.rs, w, lambda);
    entry.word = w.word;
    entry.dim = levi_dim(dims_parabolic, entry.weight);
    table.degrees[static_cast<std::size_t>(w.length)].push_back(std::move(entry));
  }
  return table;
}

}  // namespace

std::size_t HomologyTable::entry_count() const {
  std::size_t n = 0;
  for (const auto& deg : degrees) n += deg.size();
  return n;
}

HomologyTable homology_weights(const Parabolic& p, const RatVector& lambda) {
  if (lambda.size() != p.rs.rank())
    throw input_error("weight length does not match the rank");
  for (Eigen::Index i = 0; i < lambda.size(); ++i)
    if (!is_integer(lambda[i]) || lambda[i] < 0)
      throw input_error("homology weights need a dominant integral weight");
  return table_from_diagram(p, hasse_diagram(p), lambda);
}

HomologyTable relative_homology_weights(const Parabolic& p, const Parabolic& q,
                                        const RatVector& lambda) {
  if (lambda.size() != p.rs.rank())
    throw input_error("weight length does not match the rank");
  for (int i : p.levi_simples) {
    const Rational& c = lambda[i - 1];
    if (!is_integer(c) || c < 0)
      throw input_error("relative homology weight must be dominant integral away from "
                        "the crossed nodes of p (node " + std::to_string(i) + ")");
  }
  return table_from_diagram(q, relative_hasse(p, q), lambda);
}

}  // namespace pbgg
