#include "pbgg/emit.hpp"

#include <algorithm>
#include <sstream>

namespace pbgg {

namespace {

bool diagram_is_relative(const HasseDiagram& h) {
  return h.simples.size() != static_cast<std::size_t>(h.rs.rank());
}

/// Crossed sets of the original call for a relative diagram: p is the
/// complement of the generator subset, q adds the relatively crossed nodes.
std::pair<std::vector<int>, std::vector<int>> relative_crossings(const HasseDiagram& h) {
  std::vector<int> crossed_p;
  for (int i = 1; i <= h.rs.rank(); ++i)
    if (std::find(h.simples.begin(), h.simples.end(), i) == h.simples.end())
      crossed_p.push_back(i);
  std::vector<int> crossed_q = crossed_p;
  crossed_q.insert(crossed_q.end(), h.crossed.begin(), h.crossed.end());
  std::sort(crossed_q.begin(), crossed_q.end());
  return {crossed_p, crossed_q};
}

std::string join_ints(const std::vector<int>& v, const char* sep) {
  std::ostringstream out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out << sep;
    out << v[i];
  }
  return out.str();
}

std::string histogram_str(const std::vector<int>& counts) {
  return join_ints(counts, " ");
}

nlohmann::json json_of_root(const IntVector& root) {
  nlohmann::json arr = nlohmann::json::array();
  for (Eigen::Index i = 0; i < root.size(); ++i) arr.push_back(root[i]);
  return arr;
}

}  // namespace

std::string root_str(const IntVector& root) {
  std::ostringstream out;
  bool first = true;
  for (Eigen::Index i = 0; i < root.size(); ++i) {
    if (root[i] == 0) continue;
    if (!first) out << (root[i] > 0 ? "+" : "");
    if (root[i] == -1)
      out << "-";
    else if (root[i] != 1)
      out << root[i];
    out << "a" << (i + 1);
    first = false;
  }
  if (first) out << "0";
  return out.str();
}

std::string weight_str(const RatVector& weight) {
  std::ostringstream out;
  out << "[";
  for (Eigen::Index i = 0; i < weight.size(); ++i) {
    if (i) out << ",";
    out << rational_str(weight[i]);
  }
  out << "]";
  return out.str();
}

std::string word_str(const std::vector<int>& word) {
  return "(" + join_ints(word, " ") + ")";
}

nlohmann::json json_of_weight(const RatVector& weight) {
  nlohmann::json arr = nlohmann::json::array();
  for (Eigen::Index i = 0; i < weight.size(); ++i) arr.push_back(rational_str(weight[i]));
  return arr;
}

nlohmann::json json_of_bigint(const BigInt& value) {
  if (value.fits_slong_p()) return value.get_si();
  return value.get_str();
}

nlohmann::json json_of_roots(const RootSystem& rs) {
  nlohmann::json doc;
  doc["algebra"] = algebra_name(rs.type);
  nlohmann::json cartan = nlohmann::json::array();
  for (int i = 0; i < rs.rank(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (int j = 0; j < rs.rank(); ++j) row.push_back(rs.cartan(i, j));
    cartan.push_back(row);
  }
  doc["cartan"] = cartan;
  nlohmann::json sym = nlohmann::json::array();
  for (int i = 0; i < rs.rank(); ++i) sym.push_back(rs.symmetrizer[i]);
  doc["symmetrizer"] = sym;
  nlohmann::json roots = nlohmann::json::array();
  for (const IntVector& r : rs.positive_roots) roots.push_back(json_of_root(r));
  doc["positive_roots"] = roots;
  doc["rho"] = json_of_weight(rs.rho);
  return doc;
}

nlohmann::json json_of_hasse(const HasseDiagram& h, std::optional<bool> verified) {
  nlohmann::json doc;
  doc["algebra"] = algebra_name(h.rs.type);
  if (diagram_is_relative(h)) {
    auto [crossed_p, crossed_q] = relative_crossings(h);
    doc["crossed_p"] = crossed_p;
    doc["crossed_q"] = crossed_q;
  } else {
    doc["crossed"] = h.crossed;
  }
  nlohmann::json elements = nlohmann::json::array();
  for (const WeylElement& w : h.elements)
    elements.push_back({{"length", w.length}, {"word", w.word}});
  doc["elements"] = elements;
  nlohmann::json edges = nlohmann::json::array();
  for (const HasseDiagram::Edge& e : h.edges)
    edges.push_back({{"from", e.from},
                     {"root", json_of_root(h.rs.positive_roots[static_cast<std::size_t>(e.root)])},
                     {"to", e.to}});
  doc["edges"] = edges;
  if (verified) doc["verified"] = *verified;
  return doc;
}

nlohmann::json json_of_kostant(const Parabolic& p, const RatVector& lambda,
                               const HomologyTable& table) {
  nlohmann::json doc;
  doc["algebra"] = algebra_name(p.rs.type);
  doc["crossed"] = p.crossed;
  doc["weight"] = json_of_weight(lambda);
  nlohmann::json degrees = nlohmann::json::array();
  for (std::size_t k = 0; k < table.degrees.size(); ++k) {
    nlohmann::json entries = nlohmann::json::array();
    for (const HomologyEntry& entry : table.degrees[k])
      entries.push_back({{"dim", json_of_bigint(entry.dim)},
                         {"weight", json_of_weight(entry.weight)},
                         {"word", entry.word}});
    degrees.push_back({{"degree", k}, {"entries", entries}});
  }
  doc["degrees"] = degrees;
  return doc;
}

nlohmann::json json_of_bgg(const BGGDiagram& d) {
  nlohmann::json doc;
  doc["algebra"] = algebra_name(d.algebra);
  if (d.relative) {
    doc["crossed_p"] = d.crossed_p;
    doc["crossed_q"] = d.crossed;
  } else {
    doc["crossed"] = d.crossed;
  }
  doc["relative"] = d.relative;
  doc["weight"] = json_of_weight(d.lambda);
  if (d.center) {
    doc["integrable"] = d.center->integrable;
    doc["residue"] = d.center->residue;
    doc["modulus"] = d.center->modulus;
  }
  nlohmann::json nodes = nlohmann::json::array();
  for (const BGGNode& n : d.nodes)
    nodes.push_back({{"degree", n.degree},
                     {"dim", json_of_bigint(n.dim)},
                     {"weight", json_of_weight(n.weight)},
                     {"word", n.word}});
  doc["nodes"] = nodes;
  nlohmann::json edges = nlohmann::json::array();
  for (const BGGEdge& e : d.edges)
    edges.push_back({{"from", e.from},
                     {"order", e.order},
                     {"root", json_of_root(e.root)},
                     {"to", e.to}});
  doc["edges"] = edges;
  return doc;
}

nlohmann::json json_of_mult(const RootSystem& rs, const RatVector& lambda,
                            const MultiplicityTable& table,
                            const std::optional<CartanElement>& x,
                            const std::optional<BigInt>& kernel) {
  nlohmann::json doc;
  doc["algebra"] = algebra_name(rs.type);
  doc["weight"] = json_of_weight(lambda);
  doc["dim"] = json_of_bigint(table.total());
  nlohmann::json mults = nlohmann::json::array();
  for (const auto& [key, mult] : table.weight_to_mult) {
    nlohmann::json coords = nlohmann::json::array();
    for (IntScalar c : key) coords.push_back(c);
    mults.push_back({{"mult", json_of_bigint(mult)}, {"weight", coords}});
  }
  doc["multiplicities"] = mults;
  if (x) {
    doc["x"] = json_of_weight(x->pairing);
    doc["kernel_dim"] = json_of_bigint(*kernel);
  }
  return doc;
}

nlohmann::json json_of_descend(const CohomologyResult& result, std::optional<bool> verified) {
  nlohmann::json doc;
  doc["dims"] = result.dims;
  if (verified) doc["verified"] = *verified;
  return doc;
}

std::string text_of_roots(const RootSystem& rs) {
  std::ostringstream out;
  out << "algebra " << algebra_name(rs.type) << "\n";
  out << "positive roots: " << rs.positive_roots.size() << "\n";
  out << "cartan:\n";
  for (int i = 0; i < rs.rank(); ++i) {
    out << " ";
    for (int j = 0; j < rs.rank(); ++j) out << " " << rs.cartan(i, j);
    out << "\n";
  }
  out << "symmetrizer:";
  for (int i = 0; i < rs.rank(); ++i) out << " " << rs.symmetrizer[i];
  out << "\n";
  out << "roots (simple-root coordinates, height then lex):\n";
  for (const IntVector& r : rs.positive_roots) out << "  " << root_str(r) << "\n";
  return out.str();
}

std::string text_of_hasse(const HasseDiagram& h, std::optional<bool> verified) {
  std::ostringstream out;
  out << "algebra " << algebra_name(h.rs.type) << "\n";
  if (diagram_is_relative(h)) {
    auto [crossed_p, crossed_q] = relative_crossings(h);
    out << "crossed p: " << join_ints(crossed_p, ",") << "\n";
    out << "crossed q: " << join_ints(crossed_q, ",") << "\n";
  } else {
    out << "crossed: " << join_ints(h.crossed, ",") << "\n";
  }
  out << "elements: " << h.elements.size() << "\n";
  out << "histogram: " << histogram_str(h.length_histogram()) << "\n";
  for (std::size_t i = 0; i < h.elements.size(); ++i)
    out << "  " << i << ": length " << h.elements[i].length << "  word "
        << word_str(h.elements[i].word) << "\n";
  out << "edges:\n";
  for (const HasseDiagram::Edge& e : h.edges)
    out << "  " << e.from << " -> " << e.to << "  root "
        << root_str(h.rs.positive_roots[static_cast<std::size_t>(e.root)]) << "\n";
  if (verified) out << "verified: " << (*verified ? "true" : "false") << "\n";
  return out.str();
}

std::string text_of_kostant(const Parabolic& p, const RatVector& lambda,
                            const HomologyTable& table) {
  std::ostringstream out;
  out << "algebra " << algebra_name(p.rs.type) << "\n";
  out << "crossed: " << join_ints(p.crossed, ",") << "\n";
  out << "weight: " << weight_str(lambda) << "\n";
  for (std::size_t k = 0; k < table.degrees.size(); ++k) {
    out << "degree " << k << ":\n";
    for (const HomologyEntry& entry : table.degrees[k])
      out << "  weight " << weight_str(entry.weight) << "  dim " << entry.dim.get_str()
          << "  word " << word_str(entry.word) << "\n";
  }
  return out.str();
}

std::string text_of_bgg(const BGGDiagram& d) {
  std::ostringstream out;
  out << "algebra " << algebra_name(d.algebra) << "\n";
  if (d.relative) {
    out << "crossed p: " << join_ints(d.crossed_p, ",") << "\n";
    out << "crossed q: " << join_ints(d.crossed, ",") << "\n";
  } else {
    out << "crossed: " << join_ints(d.crossed, ",") << "\n";
  }
  out << "weight: " << weight_str(d.lambda) << "\n";
  out << "relative: " << (d.relative ? "yes" : "no") << "\n";
  if (d.center)
    out << "integrable: " << (d.center->integrable ? "yes" : "no") << " (residue "
        << d.center->residue << " mod " << d.center->modulus << ")\n";
  out << "nodes:\n";
  for (std::size_t i = 0; i < d.nodes.size(); ++i)
    out << "  " << i << ": degree " << d.nodes[i].degree << "  weight "
        << weight_str(d.nodes[i].weight) << "  dim " << d.nodes[i].dim.get_str()
        << "  word " << word_str(d.nodes[i].word) << "\n";
  out << "edges:\n";
  for (const BGGEdge& e : d.edges)
    out << "  " << e.from << " -> " << e.to << "  weighted order " << e.order
        << "  root " << root_str(e.root) << "\n";
  return out.str();
}

std::string text_of_mult(const RootSystem& rs, const RatVector& lambda,
                         const MultiplicityTable& table,
                         const std::optional<CartanElement>& x,
                         const std::optional<BigInt>& kernel) {
  std::ostringstream out;
  out << "algebra " << algebra_name(rs.type) << "\n";
  out << "weight: " << weight_str(lambda) << "\n";
  out << "dim " << table.total().get_str() << "\n";
  out << "multiplicities:\n";
  for (const auto& [key, mult] : table.weight_to_mult) {
    out << "  [";
    for (std::size_t i = 0; i < key.size(); ++i) {
      if (i) out << ",";
      out << key[i];
    }
    out << "] " << mult.get_str() << "\n";
  }
  if (x) {
    out << "x: " << weight_str(x->pairing) << "\n";
    out << "kernel dim: " << kernel->get_str() << "\n";
  }
  return out.str();
}

std::string text_of_descend(const CohomologyResult& result, std::optional<bool> verified) {
  std::ostringstream out;
  for (std::size_t k = 0; k < result.dims.size(); ++k)
    out << "degree " << k << ": " << result.dims[k] << "\n";
  if (verified) out << "verified: " << (*verified ? "true" : "false") << "\n";
  return out.str();
}

std::string dot_of_hasse(const HasseDiagram& h) {
  std::ostringstream out;
  out << "digraph hasse {\n  rankdir=TB;\n  node [shape=box];\n";
  for (std::size_t i = 0; i < h.elements.size(); ++i)
    out << "  n" << i << " [label=\"" << h.elements[i].length << ": "
        << word_str(h.elements[i].word) << "\"];\n";
  for (int l = 0; l <= h.max_length(); ++l) {
    out << "  { rank=same;";
    for (int id : h.ids_of_length(l)) out << " n" << id << ";";
    out << " }\n";
  }
  for (const HasseDiagram::Edge& e : h.edges)
    out << "  n" << e.from << " -> n" << e.to << " [label=\""
        << root_str(h.rs.positive_roots[static_cast<std::size_t>(e.root)]) << "\"];\n";
  out << "}\n";
  return out.str();
}

std::string dot_of_bgg(const BGGDiagram& d) {
  std::ostringstream out;
  out << "digraph bgg {\n  rankdir=LR;\n  node [shape=box];\n";
  for (std::size_t i = 0; i < d.nodes.size(); ++i)
    out << "  n" << i << " [label=\"" << d.nodes[i].degree << ": "
        << weight_str(d.nodes[i].weight) << " dim " << d.nodes[i].dim.get_str() << "\"];\n";
  std::vector<int> degrees;
  for (const BGGNode& n : d.nodes)
    if (degrees.empty() || degrees.back() != n.degree) degrees.push_back(n.degree);
  for (int deg : degrees) {
    out << "  { rank=same;";
    for (std::size_t i = 0; i < d.nodes.size(); ++i)
      if (d.nodes[i].degree == deg) out << " n" << i << ";";
    out << " }\n";
  }
  for (const BGGEdge& e : d.edges)
    out << "  n" << e.from << " -> n" << e.to << " [label=\"" << e.order << "\"];\n";
  out << "}\n";
  return out.str();
}

std::string dump_json(const nlohmann::json& doc) { return doc.dump(2) + "\n"; }

}  // namespace pbgg
