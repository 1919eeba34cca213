#pragma once

// Shared scalar types: exact rationals (GMP) plugged into Eigen dense types,
// plus the two error categories every module reports through.

#include <Eigen/Core>
#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace Eigen {

// mpq_class as an Eigen scalar. Arithmetic is exact, so epsilon and
// dummy_precision are zero.
template <>
struct NumTraits<mpq_class> : GenericNumTraits<mpq_class> {
  typedef mpq_class Real;
  typedef mpq_class NonInteger;
  typedef mpq_class Nested;
  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }
  enum {
    IsInteger = 0,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 150,
    MulCost = 100
  };
};

}  // namespace Eigen

namespace pbgg {

using Rational = mpq_class;
using BigInt = mpz_class;

using IntScalar = std::int64_t;
using IntMatrix = Eigen::Matrix<IntScalar, Eigen::Dynamic, Eigen::Dynamic>;
using IntVector = Eigen::Matrix<IntScalar, Eigen::Dynamic, 1>;
using RatMatrix = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using RatVector = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;

/// Invalid user input (bad rank, malformed weight, nesting violation, ...).
struct input_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A guarded computation would exceed its resource bound.
struct resource_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

/// num/den in canonical form (the raw two-argument mpq constructor does not
/// reduce, and GMP arithmetic requires canonical operands).
inline Rational ratio(IntScalar num, IntScalar den) {
  Rational q(static_cast<long>(num), static_cast<long>(den));
  q.canonicalize();
  return q;
}

/// Canonical string form: "p/q", or just "p" when the denominator is 1.
inline std::string rational_str(const Rational& q) { return q.get_str(); }

/// Parses "p", "-p" or "p/q" into a canonical exact rational.
Rational parse_rational(const std::string& text);

/// Narrows an integral rational; throws input_error otherwise.
long long rational_to_int(const Rational& q);

RatVector to_rational(const IntVector& v);

/// Exact rank of a rational matrix by Gaussian elimination.
int rank_exact(RatMatrix m);

/// Exact inverse by Gauss-Jordan; throws input_error on singular input.
RatMatrix inverse_exact(RatMatrix m);

}  // namespace pbgg
