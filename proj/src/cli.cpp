#include "pbgg/cli.hpp"

#include "pbgg/emit.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <ostream>
#include <set>
#include <sstream>

namespace pbgg {

namespace {

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      const int v = std::stoi(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      out.push_back(v);
    } catch (const std::exception&) {
      throw input_error("malformed integer list: '" + text + "'");
    }
  }
  if (out.empty()) throw input_error("empty integer list");
  return out;
}

std::vector<Rational> parse_rational_list(const std::string& text) {
  std::vector<Rational> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_rational(item));
  if (out.empty()) throw input_error("empty rational list");
  return out;
}

RatVector vector_of(const std::vector<Rational>& values) {
  RatVector v(static_cast<Eigen::Index>(values.size()));
  for (std::size_t i = 0; i < values.size(); ++i) v[static_cast<Eigen::Index>(i)] = values[i];
  return v;
}

enum class Format { Text, Json, Dot };

Format parse_format(const std::string& text, bool dot_allowed) {
  if (text == "text") return Format::Text;
  if (text == "json") return Format::Json;
  if (text == "dot") {
    if (!dot_allowed) throw input_error("dot output applies to hasse and bgg only");
    return Format::Dot;
  }
  throw input_error("unknown format '" + text + "'");
}

bool same_element_set(const HasseDiagram& a, const HasseDiagram& b) {
  auto keys = [](const HasseDiagram& h) {
    std::set<std::vector<IntScalar>> out;
    for (const WeylElement& w : h.elements)
      out.insert(std::vector<IntScalar>(w.action.data(), w.action.data() + w.action.size()));
    return out;
  };
  return keys(a) == keys(b) && a.length_histogram() == b.length_histogram();
}

CohomologyProfile profile_from_json(const nlohmann::json& doc) {
  if (!doc.is_object()) throw input_error("profile document must be a JSON object");
  CohomologyProfile profile;
  if (!doc.contains("dim_M") || !doc["dim_M"].is_number_integer())
    throw input_error("profile needs an integer dim_M field");
  profile.dim_m = doc["dim_M"].get<int>();
  if (!doc.contains("betti") || !doc["betti"].is_array())
    throw input_error("profile needs a betti array");
  for (const auto& v : doc["betti"]) {
    if (!v.is_number_integer()) throw input_error("betti entries must be integers");
    profile.betti.push_back(v.get<long long>());
  }
  if (doc.contains("lefschetz_ranks")) {
    if (!doc["lefschetz_ranks"].is_array())
      throw input_error("lefschetz_ranks must be an array");
    for (const auto& v : doc["lefschetz_ranks"]) {
      if (!v.is_number_integer()) throw input_error("lefschetz_ranks entries must be integers");
      profile.lefschetz_ranks.push_back(v.get<long long>());
    }
  }
  if (!doc.contains("w1") || !doc["w1"].is_number_integer())
    throw input_error("profile needs an integer w1 field");
  profile.w1 = doc["w1"].get<long long>();
  validate_profile(profile);
  return profile;
}

struct Options {
  std::string algebra;
  std::string cross, cross_p, cross_q;
  std::string weight_text;
  std::string group;
  std::string preset_text;
  std::string x_text;
  std::string profile_path;
  std::string format = "text";
  bool oracle = false;
  int cpn = 0;
  bool cpn_set = false;
  long long w1 = 0;
  bool w1_set = false;
  unsigned seed = 0;
};

int dispatch(CLI::App& app, const Options& opt, std::ostream& out, std::ostream& err) {
  if (app.got_subcommand("roots")) {
    const Format format = parse_format(opt.format, false);
    const RootSystem rs = build_root_system(parse_algebra(opt.algebra));
    out << (format == Format::Json ? dump_json(json_of_roots(rs)) : text_of_roots(rs));
    return 0;
  }

  if (app.got_subcommand("hasse")) {
    const Format format = parse_format(opt.format, true);
    const RootSystem rs = build_root_system(parse_algebra(opt.algebra));
    const Parabolic p = make_parabolic(rs, parse_int_list(opt.cross));
    const HasseDiagram h = hasse_diagram(p);
    std::optional<bool> verified;
    if (opt.oracle) verified = same_element_set(h, brute_force_hasse(p));
    switch (format) {
      case Format::Json: out << dump_json(json_of_hasse(h, verified)); break;
      case Format::Dot: out << dot_of_hasse(h); break;
      case Format::Text: out << text_of_hasse(h, verified); break;
    }
    return verified && !*verified ? 1 : 0;
  }

  if (app.got_subcommand("rel-hasse")) {
    const Format format = parse_format(opt.format, true);
    const RootSystem rs = build_root_system(parse_algebra(opt.algebra));
    const Parabolic p = make_parabolic(rs, parse_int_list(opt.cross_p));
    const Parabolic q = make_parabolic(rs, parse_int_list(opt.cross_q));
    const HasseDiagram h = relative_hasse(p, q);
    switch (format) {
      case Format::Json: out << dump_json(json_of_hasse(h, std::nullopt)); break;
      case Format::Dot: out << dot_of_hasse(h); break;
      case Format::Text: out << text_of_hasse(h, std::nullopt); break;
    }
    return 0;
  }

  if (app.got_subcommand("kostant")) {
    const Format format = parse_format(opt.format, false);
    const RootSystem rs = build_root_system(parse_algebra(opt.algebra));
    const Parabolic p = make_parabolic(rs, parse_int_list(opt.cross));
    const RatVector lambda = vector_of(parse_rational_list(opt.weight_text));
    const HomologyTable table = homology_weights(p, lambda);
    out << (format == Format::Json ? dump_json(json_of_kostant(p, lambda, table))
                                   : text_of_kostant(p, lambda, table));
    return 0;
  }

  if (app.got_subcommand("bgg")) {
    const Format format = parse_format(opt.format, true);
    BGGDiagram d;
    if (!opt.preset_text.empty()) {
      if (!opt.algebra.empty() || !opt.cross.empty() || !opt.weight_text.empty() ||
          !opt.group.empty())
        throw input_error("--preset replaces the algebra/--cross/--weight/--group form");
      const auto colon = opt.preset_text.find(':');
      const std::string name = opt.preset_text.substr(0, colon);
      std::vector<Rational> params;
      if (colon != std::string::npos)
        params = parse_rational_list(opt.preset_text.substr(colon + 1));
      d = build_preset(preset(name, params));
    } else {
      if (opt.algebra.empty() || opt.cross.empty() || opt.weight_text.empty())
        throw input_error("bgg needs either --preset or algebra with --cross and --weight");
      const RootSystem rs = build_root_system(parse_algebra(opt.algebra));
      const Parabolic p = make_parabolic(rs, parse_int_list(opt.cross));
      if (!is_contact_grading(p))
        err << "warning: crossed set is not a contact grading; proceeding\n";
      const RatVector lambda = vector_of(parse_rational_list(opt.weight_text));
      std::optional<GroupTag> tag;
      int modulus = 0;
      if (!opt.group.empty()) tag = parse_group_tag(opt.group, modulus);
      d = build_bgg(p, lambda, tag, modulus);
    }
    switch (format) {
      case Format::Json: out << dump_json(json_of_bgg(d)); break;
      case Format::Dot: out << dot_of_bgg(d); break;
      case Format::Text: out << text_of_bgg(d); break;
    }
    return 0;
  }

  if (app.got_subcommand("mult")) {
    const Format format = parse_format(opt.format, false);
    const RootSystem rs = build_root_system(parse_algebra(opt.algebra));
    const RatVector lambda = vector_of(parse_rational_list(opt.weight_text));
    const MultiplicityTable table = freudenthal(rs, lambda);
    std::optional<CartanElement> x;
    std::optional<BigInt> kernel;
    if (!opt.x_text.empty()) {
      x = CartanElement{vector_of(parse_rational_list(opt.x_text))};
      kernel = kernel_dim(rs, lambda, *x);
    }
    out << (format == Format::Json ? dump_json(json_of_mult(rs, lambda, table, x, kernel))
                                   : text_of_mult(rs, lambda, table, x, kernel));
    return 0;
  }

  if (app.got_subcommand("descend")) {
    const Format format = parse_format(opt.format, false);
    CohomologyProfile profile;
    if (!opt.profile_path.empty()) {
      if (opt.cpn_set) throw input_error("use either --profile or --cpn, not both");
      if (opt.w1_set) throw input_error("--w1 applies to --cpn only");
      std::ifstream in(opt.profile_path);
      if (!in) throw input_error("cannot open profile file '" + opt.profile_path + "'");
      nlohmann::json doc;
      try {
        in >> doc;
      } catch (const nlohmann::json::exception& e) {
        throw input_error(std::string("malformed profile JSON: ") + e.what());
      }
      profile = profile_from_json(doc);
    } else if (opt.cpn_set) {
      if (!opt.w1_set) throw input_error("--cpn needs --w1");
      profile = cpn_profile(opt.cpn, opt.w1);
    } else {
      throw input_error("descend needs --profile or --cpn");
    }
    const CohomologyResult result = descended_cohomology(profile);
    std::optional<bool> verified;
    if (opt.oracle)
      verified = les_oracle(profile, opt.seed).dims == result.dims;
    out << (format == Format::Json ? dump_json(json_of_descend(result, verified))
                                   : text_of_descend(result, verified));
    return verified && !*verified ? 1 : 0;
  }

  throw input_error("no subcommand given");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact combinatorics of parabolic Hasse diagrams, nilradical homology "
               "weights, BGG diagram shapes, and descended-complex cohomology",
               "pbgg"};
  app.require_subcommand(0, 1);
  Options opt;

  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", opt.format, "text, json or dot")->default_str("text");
  };

  CLI::App* roots = app.add_subcommand("roots", "root system data");
  roots->add_option("algebra", opt.algebra, "algebra label, e.g. C3")->required();
  add_format(roots);

  CLI::App* hasse = app.add_subcommand("hasse", "Hasse diagram of a parabolic");
  hasse->add_option("algebra", opt.algebra)->required();
  hasse->add_option("--cross", opt.cross, "crossed nodes, e.g. 1,3")->required();
  hasse->add_flag("--oracle", opt.oracle, "verify against brute-force enumeration");
  add_format(hasse);

  CLI::App* rel = app.add_subcommand("rel-hasse", "relative Hasse diagram");
  rel->add_option("algebra", opt.algebra)->required();
  rel->add_option("--cross-p", opt.cross_p, "crossed nodes of p")->required();
  rel->add_option("--cross-q", opt.cross_q, "crossed nodes of q")->required();
  add_format(rel);

  CLI::App* kostant = app.add_subcommand("kostant", "nilradical homology weights");
  kostant->add_option("algebra", opt.algebra)->required();
  kostant->add_option("--cross", opt.cross)->required();
  kostant->add_option("--weight", opt.weight_text, "dominant integral weight")->required();
  add_format(kostant);

  CLI::App* bgg = app.add_subcommand("bgg", "BGG diagram shape");
  bgg->add_option("algebra", opt.algebra);
  bgg->add_option("--cross", opt.cross);
  bgg->add_option("--weight", opt.weight_text);
  bgg->add_option("--group", opt.group, "adjoint-C, adjoint-A-even or su-center:m");
  bgg->add_option("--preset", opt.preset_text,
                  "ricci-type:n,k,... | bilagrangean:n,k,l,... | relative-parakahler:n,k,a1,...");
  add_format(bgg);

  CLI::App* mult = app.add_subcommand("mult", "weight multiplicities");
  mult->add_option("algebra", opt.algebra)->required();
  mult->add_option("--weight", opt.weight_text)->required();
  mult->add_option("--x", opt.x_text, "Cartan element pairing; adds the kernel dimension");
  add_format(mult);

  CLI::App* descend = app.add_subcommand("descend", "descended-complex cohomology dimensions");
  descend->add_option("--profile", opt.profile_path, "profile JSON file");
  descend->add_option("--cpn", opt.cpn, "complex projective space CP^n profile")
      ->each([&](const std::string&) { opt.cpn_set = true; });
  descend->add_option("--w1", opt.w1, "coefficient block dimension for --cpn")
      ->each([&](const std::string&) { opt.w1_set = true; });
  descend->add_flag("--oracle", opt.oracle, "verify against the explicit-matrix oracle");
  descend->add_option("--seed", opt.seed, "oracle randomness seed");
  add_format(descend);

  std::vector<std::string> argv = args;
  std::reverse(argv.begin(), argv.end());
  try {
    app.parse(argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return 2;
  }

  try {
    return dispatch(app, opt, out, err);
  } catch (const input_error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const resource_error& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  }
}

}  // namespace pbgg
