// Acceptance suite: every criterion prints one PASS/FAIL line; the process
// exits with the number of failed criteria.  The first argument must be the
// path to the command-line binary, which the CLI-level criteria exec.

#include "pbgg/bgg.hpp"
#include "pbgg/cli.hpp"
#include "pbgg/descent.hpp"
#include "pbgg/emit.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

using namespace pbgg;

namespace {

std::string g_cli_path;

struct CliResult {
  int code = -1;
  std::string out;
};

CliResult exec_cli(const std::vector<std::string>& args) {
  std::string command = "'" + g_cli_path + "'";
  for (const std::string& a : args) command += " '" + a + "'";
  command += " 2>/dev/null";
  CliResult result;
  FILE* pipe = popen(command.c_str(), "r");
  if (!pipe) return result;
  char buffer[4096];
  std::size_t got = 0;
  while ((got = fread(buffer, 1, sizeof buffer, pipe)) > 0) result.out.append(buffer, got);
  const int status = pclose(pipe);
  result.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

struct Check {
  bool ok = true;
  std::string reason;
  void require(bool condition, const std::string& why) {
    if (!condition && ok) {
      ok = false;
      reason = why;
    }
  }
};

int g_failures = 0;

void criterion(int number, const std::string& name, const std::function<void(Check&)>& body) {
  const auto start = std::chrono::steady_clock::now();
  Check check;
  try {
    body(check);
  } catch (const std::exception& e) {
    check.require(false, std::string("exception: ") + e.what());
  }
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::ostringstream line;
  line << (check.ok ? "PASS" : "FAIL") << "  " << number << "  " << name;
  line.setf(std::ios::fixed);
  line.precision(2);
  line << "  (" << seconds << "s)";
  if (!check.ok) line << "  -- " << check.reason;
  std::cout << line.str() << "\n";
  if (!check.ok) ++g_failures;
}

std::set<std::vector<IntScalar>> action_set(const HasseDiagram& h) {
  std::set<std::vector<IntScalar>> keys;
  for (const WeylElement& w : h.elements)
    keys.insert(std::vector<IntScalar>(w.action.data(), w.action.data() + w.action.size()));
  return keys;
}

RatVector random_dominant(const RootSystem& rs, std::mt19937& gen, int hi) {
  std::uniform_int_distribution<int> coeff(0, hi);
  RatVector v(rs.rank());
  for (int i = 0; i < rs.rank(); ++i) v[i] = Rational(coeff(gen));
  return v;
}

double run_timed_cli(Check& check, const std::vector<std::string>& args,
                     nlohmann::json& doc) {
  const auto start = std::chrono::steady_clock::now();
  const CliResult r = exec_cli(args);
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  check.require(r.code == 0, "exit code " + std::to_string(r.code));
  if (r.code == 0) doc = nlohmann::json::parse(r.out);
  return seconds;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: acceptance <path-to-cli>\n";
    return 64;
  }
  g_cli_path = argv[1];

  criterion(1, "type-C Hasse chain via CLI", [](Check& check) {
    for (int n = 2; n <= 5; ++n) {
      nlohmann::json doc;
      const double secs = run_timed_cli(
          check, {"hasse", "C" + std::to_string(n + 1), "--cross", "1", "--format", "json"},
          doc);
      check.require(secs < 1.0, "call exceeded 1 s");
      if (!check.ok) return;
      check.require(doc["elements"].size() == static_cast<std::size_t>(2 * n + 2),
                    "wrong element count for n=" + std::to_string(n));
      for (int l = 0; l <= 2 * n + 1; ++l)
        check.require(doc["elements"][static_cast<std::size_t>(l)]["length"] == l,
                      "lengths are not 0..2n+1 once each");
      check.require(doc["edges"].size() == static_cast<std::size_t>(2 * n + 1),
                    "not a chain: wrong edge count");
      for (std::size_t e = 0; e < doc["edges"].size(); ++e) {
        check.require(doc["edges"][e]["from"] == static_cast<int>(e) &&
                          doc["edges"][e]["to"] == static_cast<int>(e + 1),
                      "not a chain: broken edge");
      }
    }
  });

  criterion(2, "type-A Hasse histogram via CLI", [](Check& check) {
    for (int n = 2; n <= 5; ++n) {
      nlohmann::json doc;
      const double secs = run_timed_cli(check,
                                        {"hasse", "A" + std::to_string(n + 1), "--cross",
                                         "1," + std::to_string(n + 1), "--format", "json"},
                                        doc);
      check.require(secs < 1.0, "call exceeded 1 s");
      if (!check.ok) return;
      std::vector<int> expected;
      for (int l = 0; l <= n; ++l) expected.push_back(l + 1);
      for (int l = n; l >= 0; --l) expected.push_back(l + 1);
      std::vector<int> counts(expected.size(), 0);
      for (const auto& elem : doc["elements"]) {
        const int l = elem["length"].get<int>();
        check.require(l >= 0 && static_cast<std::size_t>(l) < counts.size(), "length range");
        if (check.ok) ++counts[static_cast<std::size_t>(l)];
      }
      check.require(counts == expected, "per-length counts off for n=" + std::to_string(n));
      check.require(doc["elements"].size() == static_cast<std::size_t>((n + 1) * (n + 2)),
                    "total count off");
    }
  });

  criterion(3, "Hasse equals brute force on all small parabolics", [](Check& check) {
    const auto start = std::chrono::steady_clock::now();
    for (const char* name : {"A3", "B3", "C3"}) {
      const RootSystem rs = build_root_system(parse_algebra(name));
      for (int mask = 1; mask < (1 << rs.rank()); ++mask) {
        std::vector<int> crossed;
        for (int i = 0; i < rs.rank(); ++i)
          if (mask & (1 << i)) crossed.push_back(i + 1);
        const Parabolic p = make_parabolic(rs, crossed);
        const HasseDiagram fast = hasse_diagram(p);
        const HasseDiagram slow = brute_force_hasse(p);
        check.require(action_set(fast) == action_set(slow),
                      std::string("element sets differ on ") + name);
        check.require(fast.length_histogram() == slow.length_histogram(),
                      std::string("length histograms differ on ") + name);
      }
    }
    const RootSystem d4 = build_root_system({Series::D, 4});
    const Parabolic p = make_parabolic(d4, {2});
    check.require(action_set(hasse_diagram(p)) == action_set(brute_force_hasse(p)),
                  "element sets differ on D4 crossed {2}");
    check.require(std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
                          .count() < 30.0,
                  "exceeded 30 s");
  });

  criterion(4, "affine-action formulas", [](Check& check) {
    std::mt19937 gen(2024);
    std::uniform_int_distribution<int> coeff(0, 6);
    std::uniform_int_distribution<int> pick_n(2, 4);

    for (int trial = 0; trial < 5; ++trial) {
      // sigma_1 on C_{n+1}: k w1 + sum a_i w_i  ->  (-k-2) w1 + (a2+k+1) w2 + rest
      const int n = pick_n(gen);
      const RootSystem rs = build_root_system({Series::C, n + 1});
      const RatVector lambda = random_dominant(rs, gen, 6);
      const RatVector image = affine_act(rs, element_from_word(rs, {1}), lambda);
      RatVector expected = lambda;
      expected[0] = -lambda[0] - 2;
      expected[1] = lambda[1] + lambda[0] + 1;
      check.require(image == expected, "sigma_1 formula fails on C series");
    }

    const RootSystem c3 = build_root_system({Series::C, 3});
    const WeylElement s1s2 = element_from_word(c3, {1, 2});
    for (int trial = 0; trial < 5; ++trial) {
      std::uniform_int_distribution<int> kl(0, 6);
      const long k = kl(gen), l = kl(gen);
      RatVector lambda = RatVector::Zero(3);
      lambda[0] = Rational(k);
      lambda[1] = Rational(l);
      RatVector expected(3);
      expected << Rational(-k - l - 3), Rational(k), Rational(l + 1);
      check.require(affine_act(c3, s1s2, lambda) == expected,
                    "sigma_1 sigma_2 formula fails on C3");
    }

    for (int trial = 0; trial < 5; ++trial) {
      // sigma_1 and sigma_{n+1} on A_{n+1} add -2(k+1) w1 + (k+1) w2 and
      // (l+1) w_n - 2(l+1) w_{n+1}
      const int n = pick_n(gen);
      const RootSystem rs = build_root_system({Series::A, n + 1});
      const RatVector lambda = random_dominant(rs, gen, 6);
      const Rational k = lambda[0], l = lambda[rs.rank() - 1];

      RatVector left = lambda;
      left[0] += Rational(-2) * (k + 1);
      left[1] += k + 1;
      check.require(affine_act(rs, element_from_word(rs, {1}), lambda) == left,
                    "sigma_1 formula fails on A series");

      RatVector right = lambda;
      right[rs.rank() - 2] += l + 1;
      right[rs.rank() - 1] += Rational(-2) * (l + 1);
      check.require(affine_act(rs, element_from_word(rs, {rs.rank()}), lambda) == right,
                    "sigma_{n+1} formula fails on A series");
    }
  });

  criterion(5, "relative Hasse chains", [](Check& check) {
    for (int n = 2; n <= 5; ++n) {
      const RootSystem rs = build_root_system({Series::A, n + 1});
      const HasseDiagram h =
          relative_hasse(make_parabolic(rs, {1}), make_parabolic(rs, {1, n + 1}));
      check.require(h.elements.size() == static_cast<std::size_t>(n + 1),
                    "wrong relative element count for n=" + std::to_string(n));
      for (int l = 0; l <= n; ++l)
        check.require(h.ids_of_length(l).size() == 1, "lengths are not 0..n once each");
      check.require(h.edges.size() == static_cast<std::size_t>(n), "not a chain");
    }
  });

  criterion(6, "operator orders k+1 and l+1", [](Check& check) {
    for (const char* name : {"C3", "C4"}) {
      const RootSystem rs = build_root_system(parse_algebra(name));
      const Parabolic p = make_parabolic(rs, {1});
      for (long k = 0; k <= 2; ++k)
        for (long l = 0; l <= 2; ++l) {
          RatVector lambda = RatVector::Zero(rs.rank());
          lambda[0] = Rational(k);
          lambda[1] = Rational(l);
          const BGGDiagram d = build_bgg(p, lambda);
          check.require(d.edges[0].order == k + 1,
                        "first order wrong at k=" + std::to_string(k));
          check.require(d.edges[1].order == l + 1,
                        "second order wrong at l=" + std::to_string(l));
        }
    }
  });

  criterion(7, "Euler characteristic of diagram dimensions", [](Check& check) {
    std::mt19937 gen(515);
    for (const char* name : {"C3", "A3"}) {
      const RootSystem rs = build_root_system(parse_algebra(name));
      const Parabolic p =
          name[0] == 'C' ? make_parabolic(rs, {1}) : make_parabolic(rs, {1, 3});
      for (int trial = 0; trial < 20; ++trial) {
        const BGGDiagram d = build_bgg(p, random_dominant(rs, gen, 4));
        BigInt chi = 0;
        for (const BGGNode& node : d.nodes)
          chi += (node.degree % 2 == 0 ? node.dim : -node.dim);
        check.require(chi == 0, std::string("nonzero Euler characteristic on ") + name);
      }
    }
  });

  criterion(8, "integrability parity truth table", [](Check& check) {
    std::mt19937 gen(8080);
    std::uniform_int_distribution<int> coeff(0, 5);
    int even_seen = 0, odd_seen = 0;
    for (int trial = 0; trial < 10; ++trial) {
      const RootSystem c3 = build_root_system({Series::C, 3});
      RatVector lambda(3);
      for (int i = 0; i < 3; ++i) lambda[i] = Rational(coeff(gen));
      if (trial == 0) lambda << Rational(2), Rational(1), Rational(0);
      if (trial == 1) lambda << Rational(1), Rational(0), Rational(0);
      const long parity =
          (rational_to_int(lambda[0]) + rational_to_int(lambda[2])) % 2;
      const CenterCharacter c = center_character(c3, lambda, GroupTag::AdjointC);
      check.require(c.residue == parity, "adjoint-C residue mismatch");
      check.require(c.integrable == (parity == 0), "adjoint-C integrability mismatch");
      (parity == 0 ? even_seen : odd_seen) += 1;
    }
    check.require(even_seen > 0 && odd_seen > 0, "C-series sample missed a parity");

    even_seen = odd_seen = 0;
    for (int trial = 0; trial < 10; ++trial) {
      const RootSystem a3 = build_root_system({Series::A, 3});
      RatVector lambda(3);
      for (int i = 0; i < 3; ++i) lambda[i] = Rational(coeff(gen));
      if (trial == 0) lambda << Rational(1), Rational(0), Rational(1);
      if (trial == 1) lambda << Rational(1), Rational(0), Rational(0);
      const long parity =
          (rational_to_int(lambda[0]) + rational_to_int(lambda[2])) % 2;
      const CenterCharacter c = center_character(a3, lambda, GroupTag::AdjointAEven);
      check.require(c.residue == parity, "adjoint-A residue mismatch");
      check.require(c.integrable == (parity == 0), "adjoint-A integrability mismatch");
      (parity == 0 ? even_seen : odd_seen) += 1;
    }
    check.require(even_seen > 0 && odd_seen > 0, "A-series sample missed a parity");
  });

  criterion(9, "weight multiplicities", [](Check& check) {
    const auto start = std::chrono::steady_clock::now();
    const RootSystem a2 = build_root_system({Series::A, 2});
    RatVector adjoint(2);
    adjoint << Rational(1), Rational(1);
    const MultiplicityTable a2t = freudenthal(a2, adjoint);
    check.require(a2t.weight_to_mult.at({0, 0}) == 2, "A2 adjoint zero weight");

    const RootSystem c2 = build_root_system({Series::C, 2});
    RatVector omega2(2);
    omega2 << Rational(0), Rational(1);
    check.require(freudenthal(c2, omega2).total() == 5, "C2 omega_2 dimension");

    std::mt19937 gen(9009);
    const char* names[] = {"A2", "A3", "C2", "C3"};
    int done = 0, attempts = 0;
    while (done < 10 && attempts < 200) {
      ++attempts;
      const RootSystem rs = build_root_system(parse_algebra(names[attempts % 4]));
      const RatVector lambda = random_dominant(rs, gen, 3);
      if (weyl_dim(rs, lambda) > 2000) continue;
      check.require(freudenthal(rs, lambda).total() == weyl_dim(rs, lambda),
                    "multiplicity sum differs from the Weyl dimension");
      ++done;
    }
    check.require(done == 10, "did not reach 10 random samples");
    check.require(std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
                          .count() < 10.0,
                  "exceeded 10 s");
  });

  criterion(10, "descended cohomology end degrees", [](Check& check) {
    for (int n = 2; n <= 5; ++n)
      for (long long w1 : {1, 3, 7}) {
        const CohomologyResult r = descended_cohomology(cpn_profile(n, w1));
        check.require(r.dims.size() == static_cast<std::size_t>(2 * n + 2), "length");
        check.require(r.dims.front() == w1 && r.dims.back() == w1, "end degrees");
        for (std::size_t k = 1; k + 1 < r.dims.size(); ++k)
          check.require(r.dims[k] == 0, "interior degree not zero");
      }
    for (long long w1 : {1, 3, 7}) {
      CohomologyProfile contractible;
      contractible.dim_m = 6;
      contractible.betti = {1};
      contractible.w1 = w1;
      const CohomologyResult r = descended_cohomology(contractible);
      check.require(r.dims[0] == w1 && r.dims[1] == w1, "contractible end degrees");
      for (std::size_t k = 2; k < r.dims.size(); ++k)
        check.require(r.dims[k] == 0, "contractible interior not zero");
    }
  });

  criterion(11, "long-exact-sequence oracle equivalence", [](Check& check) {
    const auto start = std::chrono::steady_clock::now();
    std::mt19937 gen(424242);
    std::uniform_int_distribution<int> half_n(1, 6);
    std::uniform_int_distribution<long long> entry(0, 5);
    for (int trial = 0; trial < 100; ++trial) {
      CohomologyProfile p;
      p.dim_m = 2 * half_n(gen);
      for (int j = 0; j <= p.dim_m; ++j) p.betti.push_back(entry(gen));
      for (int j = 0; j + 2 <= p.dim_m; ++j) {
        std::uniform_int_distribution<long long> rank(
            0, std::min(p.betti[static_cast<std::size_t>(j)],
                        p.betti[static_cast<std::size_t>(j) + 2]));
        p.lefschetz_ranks.push_back(rank(gen));
      }
      p.w1 = entry(gen);
      const CohomologyResult formula = descended_cohomology(p);
      for (unsigned seed : {1u, 2u, 3u})
        check.require(les_oracle(p, seed).dims == formula.dims,
                      "oracle mismatch at trial " + std::to_string(trial));
    }
    check.require(std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
                          .count() < 30.0,
                  "exceeded 30 s");
  });

  criterion(12, "CLI byte determinism", [](Check& check) {
    std::vector<std::vector<std::string>> invocations = {
        {"bgg", "C3", "--cross", "1", "--weight", "2,1,0", "--group", "adjoint-C",
         "--format", "json"},
        {"descend", "--cpn", "4", "--w1", "7", "--format", "text"},
        {"hasse", "A4", "--cross", "1,4", "--format", "text"},
    };
    for (int n = 2; n <= 5; ++n) {
      invocations.push_back({"hasse", "C" + std::to_string(n + 1), "--cross", "1"});
      invocations.push_back(
          {"hasse", "A" + std::to_string(n + 1), "--cross", "1," + std::to_string(n + 1)});
    }
    for (const auto& args : invocations) {
      const auto start = std::chrono::steady_clock::now();
      const CliResult first = exec_cli(args);
      const double seconds =
          std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      const CliResult second = exec_cli(args);
      check.require(first.code == 0, "exit code " + std::to_string(first.code));
      check.require(!first.out.empty(), "empty output");
      check.require(first.out == second.out, "output differs between runs");
      check.require(seconds < 5.0, "invocation exceeded 5 s");
    }

    // spot checks of the pinned examples
    const CliResult bgg = exec_cli({"bgg", "C3", "--cross", "1", "--weight", "2,1,0",
                                    "--group", "adjoint-C", "--format", "json"});
    const auto doc = nlohmann::json::parse(bgg.out);
    check.require(doc["nodes"].size() == 6 && doc["edges"].size() == 5,
                  "bgg example shape");
    check.require(doc["edges"][0]["order"] == 3, "bgg example first order");
    check.require(doc["integrable"] == true, "bgg example integrability");

    const CliResult descend = exec_cli({"descend", "--cpn", "4", "--w1", "7",
                                        "--format", "text"});
    check.require(descend.out.find("degree 0: 7") != std::string::npos &&
                      descend.out.find("degree 9: 7") != std::string::npos &&
                      descend.out.find("degree 4: 0") != std::string::npos,
                  "descend example values");

    const CliResult hist = exec_cli({"hasse", "A4", "--cross", "1,4", "--format", "text"});
    check.require(hist.out.find("histogram: 1 2 3 4 4 3 2 1") != std::string::npos,
                  "A4 histogram line");
  });

  std::cout << (g_failures == 0 ? "all criteria passed"
                                : std::to_string(g_failures) + " criteria failed")
            << "\n";
  return g_failures;
}
