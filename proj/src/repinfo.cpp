#include "pbgg/repinfo.hpp"

#include <algorithm>
#include <functional>

namespace pbgg {

namespace {

constexpr long kFreudenthalGuard = 100000;

void check_dominant_integral(const RatVector& lambda, const char* what) {
  for (Eigen::Index i = 0; i < lambda.size(); ++i) {
    if (!is_integer(lambda[i]) || lambda[i] < 0)
      throw input_error(std::string(what) + " must have non-negative integer coefficients");
  }
}

BigInt product_formula(const RootSystem& rs, const RatVector& lambda,
                       const std::vector<int>& root_indices) {
  const RatVector shifted = lambda + rs.rho;
  Rational dim = 1;
  for (int t : root_indices) {
    const IntVector& alpha = rs.positive_roots[static_cast<std::size_t>(t)];
    dim *= pair_with_root(rs, shifted, alpha) / pair_with_root(rs, rs.rho, alpha);
  }
  if (!is_integer(dim) || dim <= 0)
    throw std::logic_error("dimension formula did not produce a positive integer");
  return dim.get_num();
}

std::vector<IntScalar> key_of(const RatVector& v) {
  std::vector<IntScalar> key(static_cast<std::size_t>(v.size()));
  for (Eigen::Index i = 0; i < v.size(); ++i)
    key[static_cast<std::size_t>(i)] = rational_to_int(v[i]);
  return key;
}

}  // namespace

BigInt weyl_dim(const RootSystem& rs, const RatVector& lambda) {
  if (lambda.size() != rs.rank()) throw input_error("weight length does not match the rank");
  check_dominant_integral(lambda, "weyl_dim weight");
  std::vector<int> all(rs.positive_roots.size());
  for (std::size_t t = 0; t < all.size(); ++t) all[t] = static_cast<int>(t);
  return product_formula(rs, lambda, all);
}

BigInt levi_dim(const Parabolic& p, const RatVector& mu) {
  if (mu.size() != p.rs.rank()) throw input_error("weight length does not match the rank");
  for (int i : p.levi_simples) {
    const Rational& c = mu[i - 1];
    if (!is_integer(c) || c < 0)
      throw input_error("weight is not Levi-dominant-integral at node " + std::to_string(i));
  }
  std::vector<int> levi_roots;
  std::vector<bool> allowed(static_cast<std::size_t>(p.rs.rank()) + 1, false);
  for (int i : p.levi_simples) allowed[static_cast<std::size_t>(i)] = true;
  for (std::size_t t = 0; t < p.rs.positive_roots.size(); ++t) {
    const IntVector& r = p.rs.positive_roots[t];
    bool ok = true;
    for (int i = 0; i < p.rs.rank(); ++i)
      if (r[i] != 0 && !allowed[static_cast<std::size_t>(i) + 1]) { ok = false; break; }
    if (ok) levi_roots.push_back(static_cast<int>(t));
  }
  // The pairing of mu against a Levi root only sees Levi coordinates, so
  // rational coefficients at crossed nodes are harmless.
  RatVector clipped = mu;
  for (int i : p.crossed) clipped[i - 1] = 0;
  return product_formula(p.rs, clipped, levi_roots);
}

BigInt MultiplicityTable::total() const {
  BigInt sum = 0;
  for (const auto& [w, m] : weight_to_mult) sum += m;
  return sum;
}

MultiplicityTable freudenthal(const RootSystem& rs, const RatVector& lambda) {
  if (lambda.size() != rs.rank()) throw input_error("weight length does not match the rank");
  check_dominant_integral(lambda, "freudenthal weight");
  const BigInt dim = weyl_dim(rs, lambda);
  if (dim > kFreudenthalGuard)
    throw resource_error("representation dimension " + dim.get_str() +
                         " exceeds the multiplicity guard");

  const int n = rs.rank();

  // Dominant weights of V(lambda) are exactly the dominant mu with
  // lambda - mu a non-negative integer root combination; enumerate the box
  // 0 <= k <= root-coordinates of lambda (the inverse Cartan is positive,
  // so these bound every admissible k).
  const RatVector lambda_root = weight_to_root_basis(rs, lambda);
  std::vector<IntScalar> bound(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const BigInt floor = lambda_root[i].get_num() / lambda_root[i].get_den();
    bound[static_cast<std::size_t>(i)] = floor.get_si();
  }

  struct Dominant {
    RatVector mu;
    IntVector depth_coords;  // lambda - mu in the simple-root basis
    IntScalar depth = 0;
  };
  std::vector<Dominant> dominants;
  IntVector k = IntVector::Zero(n);
  std::function<void(int)> scan = [&](int pos) {
    if (pos == n) {
      RatVector mu = lambda;
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) mu[j] -= Rational(k[i] * rs.cartan(i, j));
      for (int j = 0; j < n; ++j)
        if (mu[j] < 0) return;
      dominants.push_back({mu, k, k.sum()});
      return;
    }
    for (k[pos] = 0; k[pos] <= bound[static_cast<std::size_t>(pos)]; ++k[pos]) scan(pos + 1);
    k[pos] = 0;
  };
  scan(0);
  std::sort(dominants.begin(), dominants.end(),
            [](const Dominant& a, const Dominant& b) { return a.depth < b.depth; });

  // Freudenthal recursion in increasing depth; lookups of higher weights go
  // through their dominant representative.
  std::map<std::vector<IntScalar>, BigInt> dominant_mult;
  const Rational top_norm = inner_product(rs, lambda + rs.rho, lambda + rs.rho);
  for (const Dominant& dom : dominants) {
    if (dom.depth == 0) {
      dominant_mult[key_of(dom.mu)] = 1;
      continue;
    }
    Rational rhs = 0;
    for (const IntVector& alpha : rs.positive_roots) {
      IntVector remaining = dom.depth_coords;
      RatVector mu_j = dom.mu;
      const RatVector alpha_w = root_to_weight_basis(rs, alpha);
      for (IntScalar j = 1;; ++j) {
        remaining -= alpha;
        if (remaining.minCoeff() < 0) break;
        mu_j += alpha_w;
        auto it = dominant_mult.find(key_of(dominant_representative(rs, mu_j)));
        if (it == dominant_mult.end()) continue;
        rhs += Rational(2) * Rational(it->second) * pair_with_root(rs, mu_j, alpha);
      }
    }
    const Rational denom = top_norm - inner_product(rs, dom.mu + rs.rho, dom.mu + rs.rho);
    const Rational m = rhs / denom;
    if (!is_integer(m) || m < 0)
      throw std::logic_error("Freudenthal recursion produced a non-integer");
    if (m > 0) dominant_mult[key_of(dom.mu)] = m.get_num();
  }

  // Expand each dominant weight over its Weyl orbit.
  MultiplicityTable table;
  for (const auto& [dom_key, mult] : dominant_mult) {
    std::vector<RatVector> frontier;
    RatVector seed(n);
    for (int i = 0; i < n; ++i) seed[i] = Rational(dom_key[static_cast<std::size_t>(i)]);
    table.weight_to_mult[dom_key] = mult;
    frontier.push_back(seed);
    while (!frontier.empty()) {
      std::vector<RatVector> next;
      for (const RatVector& mu : frontier) {
        for (int i = 0; i < n; ++i) {
          RatVector im = mu;
          const Rational c = mu[i];
          for (int j = 0; j < n; ++j) im[j] -= c * Rational(rs.cartan(i, j));
          auto key = key_of(im);
          if (table.weight_to_mult.emplace(key, mult).second) next.push_back(im);
        }
      }
      frontier = std::move(next);
    }
  }
  if (table.total() != dim)
    throw std::logic_error("multiplicities do not sum to the Weyl dimension");
  return table;
}

Rational CartanElement::value(const RatVector& mu) const {
  if (mu.size() != pairing.size()) throw input_error("Cartan element length mismatch");
  return pairing.dot(mu);
}

BigInt kernel_dim(const RootSystem& rs, const RatVector& lambda, const CartanElement& x) {
  if (x.pairing.size() != rs.rank())
    throw input_error("Cartan element length does not match the rank");
  const MultiplicityTable table = freudenthal(rs, lambda);
  BigInt dim = 0;
  for (const auto& [key, mult] : table.weight_to_mult) {
    Rational v = 0;
    for (int i = 0; i < rs.rank(); ++i)
      v += x.pairing[i] * Rational(key[static_cast<std::size_t>(i)]);
    if (v == 0) dim += mult;
  }
  return dim;
}

GroupTag parse_group_tag(const std::string& text, int& modulus) {
  modulus = 0;
  if (text == "adjoint-C") return GroupTag::AdjointC;
  if (text == "adjoint-A-even") return GroupTag::AdjointAEven;
  if (text.rfind("su-center:", 0) == 0) {
    try {
      modulus = std::stoi(text.substr(10));
    } catch (const std::exception&) {
      throw input_error("malformed group tag: '" + text + "'");
    }
    return GroupTag::SuCenter;
  }
  throw input_error("unknown group tag: '" + text + "'");
}

std::string group_tag_name(GroupTag tag, int modulus) {
  switch (tag) {
    case GroupTag::AdjointC: return "adjoint-C";
    case GroupTag::AdjointAEven: return "adjoint-A-even";
    case GroupTag::SuCenter: return "su-center:" + std::to_string(modulus);
  }
  return "";
}

CenterCharacter center_character(const RootSystem& rs, const RatVector& lambda,
                                 GroupTag tag, int modulus) {
  if (lambda.size() != rs.rank()) throw input_error("weight length does not match the rank");
  for (Eigen::Index i = 0; i < lambda.size(); ++i)
    if (!is_integer(lambda[i])) throw input_error("center character needs an integral weight");

  CenterCharacter out;
  switch (tag) {
    case GroupTag::AdjointC: {
      if (rs.type.series != Series::C)
        throw input_error("adjoint-C applies to the C series only");
      long sum = 0;
      for (int i = 1; i <= rs.rank(); i += 2) sum += rational_to_int(lambda[i - 1]);
      out.modulus = 2;
      out.residue = ((sum % 2) + 2) % 2;
      break;
    }
    case GroupTag::AdjointAEven: {
      // -id lies in SL(rank+1) only when rank is odd; that is the case where
      // the projective quotient imposes a parity condition.
      if (rs.type.series != Series::A || rs.rank() % 2 == 0)
        throw input_error("adjoint-A-even applies to the A series with odd rank");
      long sum = 0;
      for (int i = 1; i <= rs.rank(); i += 2) sum += rational_to_int(lambda[i - 1]);
      out.modulus = 2;
      out.residue = ((sum % 2) + 2) % 2;
      break;
    }
    case GroupTag::SuCenter: {
      if (rs.type.series != Series::A)
        throw input_error("su-center applies to the A series only");
      if (modulus != rs.rank() + 1)
        throw input_error("su-center modulus must be rank + 1 = " +
                          std::to_string(rs.rank() + 1));
      long sum = 0;
      for (int i = 1; i <= rs.rank(); ++i)
        sum = (sum + i * (rational_to_int(lambda[i - 1]) % modulus)) % modulus;
      out.modulus = modulus;
      out.residue = ((sum % modulus) + modulus) % modulus;
      break;
    }
  }
  out.integrable = out.residue == 0;
  return out;
}

RatVector cartan_product(const RatVector& lambda, const RatVector& mu) {
  if (lambda.size() != mu.size()) throw input_error("Cartan product length mismatch");
  return lambda + mu;
}

}  // namespace pbgg
