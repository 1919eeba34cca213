#include "pbgg/descent.hpp"

#include <random>

namespace pbgg {

namespace {

constexpr long long kEntryBound = 1LL << 31;

/// m x n rational matrix of exactly the requested rank: a 0/1 pivot block
/// scrambled by random signed permutations and unit shears on both sides.
RatMatrix random_matrix_of_rank(Eigen::Index rows, Eigen::Index cols, long long rank,
                                std::mt19937& gen) {
  RatMatrix m = RatMatrix::Zero(rows, cols);
  for (long long t = 0; t < rank; ++t) m(t, t) = 1;
  if (rows == 0 || cols == 0) return m;
  std::uniform_int_distribution<int> sign(0, 1);
  std::uniform_int_distribution<Eigen::Index> row(0, rows - 1), col(0, cols - 1);
  for (Eigen::Index i = 0; i < rows; ++i) {
    const Eigen::Index j = row(gen);
    if (i != j) m.row(i).swap(m.row(j));
    if (sign(gen)) m.row(i) = -m.row(i);
  }
  for (Eigen::Index i = 0; i < cols; ++i) {
    const Eigen::Index j = col(gen);
    if (i != j) m.col(i).swap(m.col(j));
  }
  const Eigen::Index shears = std::min<Eigen::Index>(rows + cols, 12);
  for (Eigen::Index s = 0; s < shears; ++s) {
    const Eigen::Index i = row(gen), j = row(gen);
    if (i != j) m.row(i) += (sign(gen) ? Rational(1) : Rational(-1)) * m.row(j);
    const Eigen::Index a = col(gen), b = col(gen);
    if (a != b) m.col(a) += (sign(gen) ? Rational(1) : Rational(-1)) * m.col(b);
  }
  return m;
}

}  // namespace

long long CohomologyProfile::b(int k) const {
  if (k < 0 || static_cast<std::size_t>(k) >= betti.size()) return 0;
  return betti[static_cast<std::size_t>(k)];
}

long long CohomologyProfile::r(int k) const {
  if (k < 0 || static_cast<std::size_t>(k) >= lefschetz_ranks.size()) return 0;
  return lefschetz_ranks[static_cast<std::size_t>(k)];
}

void validate_profile(const CohomologyProfile& profile) {
  if (profile.dim_m <= 0 || profile.dim_m % 2 != 0)
    throw input_error("dim_M must be an even positive integer");
  if (profile.w1 < 0 || profile.w1 >= kEntryBound)
    throw input_error("w1 out of range");
  if (profile.betti.size() > static_cast<std::size_t>(profile.dim_m) + 1)
    throw input_error("betti list longer than dim_M + 1");
  if (profile.lefschetz_ranks.size() > static_cast<std::size_t>(profile.dim_m) - 1)
    throw input_error("lefschetz_ranks list longer than dim_M - 1");
  for (long long v : profile.betti)
    if (v < 0 || v >= kEntryBound) throw input_error("betti entry out of range");
  for (std::size_t j = 0; j < profile.lefschetz_ranks.size(); ++j) {
    const long long rj = profile.lefschetz_ranks[j];
    if (rj < 0) throw input_error("negative Lefschetz rank");
    const int jj = static_cast<int>(j);
    if (rj > std::min(profile.b(jj), profile.b(jj + 2)))
      throw input_error("lefschetz rank r_" + std::to_string(j) +
                        " exceeds min(b_" + std::to_string(j) + ", b_" +
                        std::to_string(j + 2) + ")");
  }
}

CohomologyResult descended_cohomology(const CohomologyProfile& profile) {
  validate_profile(profile);
  CohomologyResult result;
  const int top = profile.dim_m + 1;
  result.dims.resize(static_cast<std::size_t>(top) + 1, 0);
  for (int k = 0; k <= top; ++k) {
    const long long coker = profile.b(k) - profile.r(k - 2);
    const long long kernel = profile.b(k - 1) - profile.r(k - 1);
    result.dims[static_cast<std::size_t>(k)] = profile.w1 * (coker + kernel);
  }
  return result;
}

CohomologyResult les_oracle(const CohomologyProfile& profile, unsigned seed) {
  validate_profile(profile);
  std::mt19937 gen(seed);
  const int top = profile.dim_m + 1;

  // delta_j : C^j -> K^{j+2}, both of the stated dimensions; measure every
  // rank by elimination rather than trusting the prescription.
  std::vector<long long> rank_of(static_cast<std::size_t>(top) + 2, 0);
  std::vector<long long> nullity_of(static_cast<std::size_t>(top) + 2, 0);
  for (int j = 0; j <= profile.dim_m; ++j) {
    const Eigen::Index cols = static_cast<Eigen::Index>(profile.b(j) * profile.w1);
    const Eigen::Index rows = static_cast<Eigen::Index>(profile.b(j + 2) * profile.w1);
    const long long prescribed = profile.r(j) * profile.w1;
    const RatMatrix delta = random_matrix_of_rank(rows, cols, prescribed, gen);
    const long long measured = rank_exact(delta);
    rank_of[static_cast<std::size_t>(j)] = measured;
    nullity_of[static_cast<std::size_t>(j)] = static_cast<long long>(cols) - measured;
  }

  CohomologyResult result;
  result.dims.resize(static_cast<std::size_t>(top) + 1, 0);
  for (int k = 0; k <= top; ++k) {
    // Exactness at A^k: dim = dim coker(delta into K^k) + dim ker(delta out
    // of C^{k-1}).
    const long long into = k >= 2 ? rank_of[static_cast<std::size_t>(k - 2)] : 0;
    const long long coker = profile.b(k) * profile.w1 - into;
    const long long kernel =
        k >= 1 ? nullity_of[static_cast<std::size_t>(k - 1)]
               : 0;
    result.dims[static_cast<std::size_t>(k)] = coker + kernel;
  }
  return result;
}

CohomologyProfile cpn_profile(int n, long long w1) {
  if (n < 2) throw input_error("cpn_profile needs n >= 2");
  if (w1 < 0) throw input_error("w1 must be non-negative");
  CohomologyProfile profile;
  profile.dim_m = 2 * n;
  profile.betti.resize(static_cast<std::size_t>(2 * n) + 1, 0);
  for (int j = 0; j <= 2 * n; j += 2) profile.betti[static_cast<std::size_t>(j)] = 1;
  profile.lefschetz_ranks.resize(static_cast<std::size_t>(2 * n) - 1, 0);
  for (int j = 0; j <= 2 * n - 2; j += 2)
    profile.lefschetz_ranks[static_cast<std::size_t>(j)] = 1;
  profile.w1 = w1;
  return profile;
}

}  // namespace pbgg
