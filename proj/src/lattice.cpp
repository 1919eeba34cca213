#include "pbgg/lattice.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace pbgg {

namespace {

void check_rank(Series s, int rank) {
  int min_rank = 0;
  switch (s) {
    case Series::A: min_rank = 1; break;
    case Series::B: min_rank = 2; break;
    case Series::C: min_rank = 2; break;
    case Series::D: min_rank = 3; break;
  }
  if (rank < min_rank)
    throw input_error("rank " + std::to_string(rank) + " is below the minimum " +
                      std::to_string(min_rank) + " for this series");
}

IntMatrix cartan_matrix(LieTypeRank type) {
  const int n = type.rank;
  IntMatrix a = IntMatrix::Zero(n, n);
  for (int i = 0; i < n; ++i) a(i, i) = 2;
  auto bond = [&](int i, int j) { a(i, j) = -1; a(j, i) = -1; };
  switch (type.series) {
    case Series::A:
      for (int i = 0; i + 1 < n; ++i) bond(i, i + 1);
      break;
    case Series::B:
      // alpha_n short: <alpha_{n-1}, alpha_n^vee> = -2.
      for (int i = 0; i + 1 < n; ++i) bond(i, i + 1);
      a(n - 2, n - 1) = -2;
      break;
    case Series::C:
      // alpha_n long: <alpha_n, alpha_{n-1}^vee> = -2.
      for (int i = 0; i + 1 < n; ++i) bond(i, i + 1);
      a(n - 1, n - 2) = -2;
      break;
    case Series::D:
      for (int i = 0; i + 2 < n; ++i) bond(i, i + 1);
      bond(n - 3, n - 1);
      break;
  }
  return a;
}

IntVector compute_symmetrizer(const IntMatrix& a) {
  // d_i A(i,j) = d_j A(j,i) propagated over the Dynkin graph; normalized to
  // coprime positive integers.  Rational intermediates keep it exact.
  const int n = static_cast<int>(a.rows());
  std::vector<Rational> d(n, 0);
  d[0] = 1;
  std::vector<int> stack = {0};
  while (!stack.empty()) {
    const int i = stack.back();
    stack.pop_back();
    for (int j = 0; j < n; ++j) {
      if (i == j || a(i, j) == 0 || d[j] != 0) continue;
      d[j] = d[i] * Rational(a(i, j)) / Rational(a(j, i));
      stack.push_back(j);
    }
  }
  BigInt scale = 1;
  for (int i = 0; i < n; ++i) {
    if (d[i] == 0) throw input_error("disconnected Dynkin diagram");
    scale = lcm(scale, d[i].get_den());
  }
  IntVector out(n);
  BigInt common = 0;
  for (int i = 0; i < n; ++i) {
    BigInt v = d[i].get_num() * (scale / d[i].get_den());
    common = gcd(common, v);
  }
  for (int i = 0; i < n; ++i) {
    BigInt v = d[i].get_num() * (scale / d[i].get_den()) / common;
    out[i] = v.get_si();
  }
  return out;
}

std::vector<IntScalar> key_of(const IntVector& v) {
  return std::vector<IntScalar>(v.data(), v.data() + v.size());
}

}  // namespace

LieTypeRank parse_algebra(const std::string& name) {
  if (name.size() < 2) throw input_error("malformed algebra label: '" + name + "'");
  Series s;
  switch (name[0]) {
    case 'A': s = Series::A; break;
    case 'B': s = Series::B; break;
    case 'C': s = Series::C; break;
    case 'D': s = Series::D; break;
    default:
      throw input_error("unknown series '" + name.substr(0, 1) + "' (expected A, B, C or D)");
  }
  for (std::size_t i = 1; i < name.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(name[i])))
      throw input_error("malformed algebra label: '" + name + "'");
  int rank = 0;
  try {
    rank = std::stoi(name.substr(1));
  } catch (const std::out_of_range&) {
    throw input_error("rank out of range: '" + name + "'");
  }
  check_rank(s, rank);
  return {s, rank};
}

std::string algebra_name(const LieTypeRank& type) {
  static const char* letters = "ABCD";
  return std::string(1, letters[static_cast<int>(type.series)]) + std::to_string(type.rank);
}

int RootSystem::root_index(const IntVector& coords) const {
  auto it = root_lookup_.find(key_of(coords));
  return it == root_lookup_.end() ? -1 : it->second;
}

BigInt RootSystem::weyl_order() const {
  const int n = type.rank;
  BigInt fact = 1;
  for (int i = 2; i <= n; ++i) fact *= i;
  switch (type.series) {
    case Series::A: return fact * (n + 1);
    case Series::B:
    case Series::C: {
      BigInt p = 1;
      for (int i = 0; i < n; ++i) p *= 2;
      return fact * p;
    }
    case Series::D: {
      BigInt p = 1;
      for (int i = 0; i < n - 1; ++i) p *= 2;
      return fact * p;
    }
  }
  return 0;
}

RootSystem build_root_system(LieTypeRank type) {
  check_rank(type.series, type.rank);
  RootSystem rs;
  rs.type = type;
  rs.cartan = cartan_matrix(type);
  rs.symmetrizer = compute_symmetrizer(rs.cartan);

  const int n = type.rank;

  // Positive roots: close the set of simple roots under simple reflections.
  // s_i(r) = r - <r, alpha_i^vee> e_i with <r, alpha_i^vee> = sum_j r_j A(j,i).
  std::set<std::vector<IntScalar>> seen;
  std::vector<IntVector> roots;
  for (int i = 0; i < n; ++i) {
    IntVector e = IntVector::Zero(n);
    e[i] = 1;
    seen.insert(key_of(e));
    roots.push_back(e);
  }
  for (std::size_t head = 0; head < roots.size(); ++head) {
    const IntVector r = roots[head];
    for (int i = 0; i < n; ++i) {
      IntScalar pairing = 0;
      for (int j = 0; j < n; ++j) pairing += r[j] * rs.cartan(j, i);
      IntVector image = r;
      image[i] -= pairing;
      if (image.minCoeff() < 0) continue;  // crossed to the negative side
      if (seen.insert(key_of(image)).second) roots.push_back(image);
    }
  }
  // Height first; within a height level, lexicographically with alpha_1
  // weighted heaviest, so the simple roots list as alpha_1, ..., alpha_n.
  std::sort(roots.begin(), roots.end(), [](const IntVector& x, const IntVector& y) {
    const IntScalar hx = root_height(x), hy = root_height(y);
    if (hx != hy) return hx < hy;
    return std::lexicographical_compare(y.data(), y.data() + y.size(),
                                        x.data(), x.data() + x.size());
  });
  rs.positive_roots = std::move(roots);
  for (std::size_t t = 0; t < rs.positive_roots.size(); ++t)
    rs.root_lookup_[key_of(rs.positive_roots[t])] = static_cast<int>(t);

  const std::size_t expected =
      type.series == Series::A   ? static_cast<std::size_t>(n) * (n + 1) / 2
      : type.series == Series::D ? static_cast<std::size_t>(n) * (n - 1)
                                 : static_cast<std::size_t>(n) * n;
  if (rs.positive_roots.size() != expected)
    throw std::logic_error("positive root closure has the wrong cardinality");

  rs.rho = RatVector::Constant(n, Rational(1));

  RatMatrix at(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) at(i, j) = Rational(rs.cartan(j, i));
  rs.inv_cartan_t = inverse_exact(at);

  RatMatrix da(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) da(i, j) = Rational(rs.symmetrizer[i] * rs.cartan(i, j));
  rs.form = inverse_exact(da);

  return rs;
}

Rational inner_product(const RootSystem& rs, const RatVector& x, const RatVector& y) {
  if (x.size() != rs.rank() || y.size() != rs.rank())
    throw input_error("weight length does not match the rank");
  return x.dot(rs.form * y);
}

RatVector weight_to_root_basis(const RootSystem& rs, const RatVector& lambda) {
  if (lambda.size() != rs.rank()) throw input_error("weight length does not match the rank");
  return rs.inv_cartan_t * lambda;
}

RatVector root_to_weight_basis(const RootSystem& rs, const IntVector& root) {
  RatVector out = RatVector::Zero(rs.rank());
  for (int j = 0; j < rs.rank(); ++j)
    for (int i = 0; i < rs.rank(); ++i) out[j] += Rational(root[i] * rs.cartan(i, j));
  return out;
}

Rational pair_with_root(const RootSystem& rs, const RatVector& x, const IntVector& root) {
  Rational out = 0;
  for (int i = 0; i < rs.rank(); ++i)
    out += x[i] * ratio(root[i], rs.symmetrizer[i]);
  return out;
}

IntScalar root_height(const IntVector& root) { return root.sum(); }

IntMatrix simple_reflection_matrix(const RootSystem& rs, int i) {
  if (i < 1 || i > rs.rank()) throw input_error("simple reflection index out of range");
  IntMatrix m = IntMatrix::Identity(rs.rank(), rs.rank());
  m.col(i - 1) -= rs.cartan.row(i - 1).transpose();
  return m;
}

IntMatrix reflection_matrix(const RootSystem& rs, const IntVector& root) {
  // s_beta(x) = x - <x, beta^vee> beta.  In omega-coordinates this is
  // I - (2 / <beta,beta>) (A^T r) (D^{-1} r)^T, which is integral.
  const int n = rs.rank();
  const RatVector beta_omega = root_to_weight_basis(rs, root);
  const Rational norm = pair_with_root(rs, beta_omega, root);
  RatMatrix m = RatMatrix::Identity(n, n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c)
      m(r, c) -= Rational(2) * beta_omega[r] * ratio(root[c], rs.symmetrizer[c]) / norm;
  IntMatrix out(n, n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) {
      if (!is_integer(m(r, c)))
        throw std::logic_error("reflection matrix is not integral");
      out(r, c) = static_cast<IntScalar>(m(r, c).get_num().get_si());
    }
  return out;
}

IntMatrix action_on_roots(const RootSystem& rs, const IntMatrix& action) {
  const int n = rs.rank();
  RatMatrix at(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) at(i, j) = Rational(rs.cartan(j, i));
  RatMatrix ratact(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) ratact(i, j) = Rational(action(i, j));
  RatMatrix m = rs.inv_cartan_t * ratact * at;
  IntMatrix out(n, n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) {
      if (!is_integer(m(r, c)))
        throw std::logic_error("Weyl action does not preserve the root lattice");
      out(r, c) = static_cast<IntScalar>(m(r, c).get_num().get_si());
    }
  return out;
}

namespace {

bool root_coords_negative(const IntVector& coords) {
  bool nonzero = false;
  for (Eigen::Index i = 0; i < coords.size(); ++i) {
    if (coords[i] > 0) return false;
    if (coords[i] < 0) nonzero = true;
  }
  return nonzero;
}

IntMatrix int_inverse(const IntMatrix& m) {
  const int n = static_cast<int>(m.rows());
  RatMatrix rm(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) rm(i, j) = Rational(m(i, j));
  RatMatrix inv = inverse_exact(rm);
  IntMatrix out(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (!is_integer(inv(i, j))) throw std::logic_error("non-integral Weyl inverse");
      out(i, j) = static_cast<IntScalar>(inv(i, j).get_num().get_si());
    }
  return out;
}

}  // namespace

WeylElement element_from_action(const RootSystem& rs, const IntMatrix& action) {
  WeylElement w;
  w.action = action;

  const IntMatrix inv_on_roots = action_on_roots(rs, int_inverse(action));
  for (std::size_t t = 0; t < rs.positive_roots.size(); ++t) {
    IntVector image = inv_on_roots * rs.positive_roots[t];
    if (root_coords_negative(image)) w.inversion_set.push_back(static_cast<int>(t));
  }
  w.length = static_cast<int>(w.inversion_set.size());

  // Lexicographically least reduced word: repeatedly strip the smallest left
  // descent i (those with w^{-1}(alpha_i) negative).
  IntMatrix cur_inv_roots = inv_on_roots;
  IntMatrix cur = action;
  const int n = rs.rank();
  std::vector<IntMatrix> simple_root_action(n);
  for (int i = 0; i < n; ++i) {
    IntMatrix ri = IntMatrix::Identity(n, n);
    ri.row(i) -= rs.cartan.col(i).transpose();
    simple_root_action[i] = ri;
  }
  for (int remaining = w.length; remaining > 0; --remaining) {
    int descent = -1;
    for (int i = 0; i < n; ++i) {
      if (root_coords_negative(cur_inv_roots.col(i))) { descent = i; break; }
    }
    if (descent < 0) throw std::logic_error("descent search failed");
    w.word.push_back(descent + 1);
    cur = simple_reflection_matrix(rs, descent + 1) * cur;
    cur_inv_roots = cur_inv_roots * simple_root_action[descent];
  }
  if (!(cur == IntMatrix::Identity(n, n)))
    throw std::logic_error("word peeling did not reach the identity");
  return w;
}

WeylElement element_from_word(const RootSystem& rs, const std::vector<int>& word) {
  IntMatrix m = IntMatrix::Identity(rs.rank(), rs.rank());
  for (int i : word) {
    if (i < 1 || i > rs.rank())
      throw input_error("reflection index " + std::to_string(i) + " out of range");
    m *= simple_reflection_matrix(rs, i);
  }
  return element_from_action(rs, m);
}

WeylElement identity_element(const RootSystem& rs) {
  return element_from_action(rs, IntMatrix::Identity(rs.rank(), rs.rank()));
}

WeylElement compose(const RootSystem& rs, const WeylElement& a, const WeylElement& b) {
  return element_from_action(rs, a.action * b.action);
}

RatVector weyl_act(const WeylElement& w, const RatVector& lambda) {
  RatVector out = RatVector::Zero(lambda.size());
  for (Eigen::Index i = 0; i < lambda.size(); ++i)
    for (Eigen::Index j = 0; j < lambda.size(); ++j)
      out[i] += Rational(w.action(i, j)) * lambda[j];
  return out;
}

RatVector affine_act(const RootSystem& rs, const WeylElement& w, const RatVector& lambda) {
  if (lambda.size() != rs.rank()) throw input_error("weight length does not match the rank");
  RatVector shifted = lambda + rs.rho;
  return weyl_act(w, shifted) - rs.rho;
}

RatVector dominant_representative(const RootSystem& rs, RatVector mu) {
  bool moved = true;
  while (moved) {
    moved = false;
    for (int i = 0; i < rs.rank(); ++i) {
      if (mu[i] < 0) {
        // s_i(mu) = mu - mu_i alpha_i
        const Rational c = mu[i];
        for (int j = 0; j < rs.rank(); ++j) mu[j] -= c * Rational(rs.cartan(i, j));
        moved = true;
      }
    }
  }
  return mu;
}

}  // namespace pbgg
