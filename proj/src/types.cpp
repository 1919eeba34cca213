#include "pbgg/types.hpp"

namespace pbgg {

Rational parse_rational(const std::string& text) {
  if (text.empty()) throw input_error("empty rational literal");
  mpq_class q;
  if (q.set_str(text, 10) != 0)
    throw input_error("malformed rational literal: '" + text + "'");
  if (q.get_den() == 0) throw input_error("zero denominator: '" + text + "'");
  q.canonicalize();
  return q;
}

long long rational_to_int(const Rational& q) {
  if (!is_integer(q)) throw input_error("expected an integer, got " + rational_str(q));
  if (!q.get_num().fits_slong_p())
    throw input_error("integer out of range: " + rational_str(q));
  return q.get_num().get_si();
}

RatVector to_rational(const IntVector& v) {
  RatVector out(v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) out[i] = Rational(v[i]);
  return out;
}

int rank_exact(RatMatrix m) {
  const Eigen::Index rows = m.rows(), cols = m.cols();
  int rank = 0;
  Eigen::Index row = 0;
  for (Eigen::Index col = 0; col < cols && row < rows; ++col) {
    Eigen::Index pivot = -1;
    for (Eigen::Index r = row; r < rows; ++r)
      if (m(r, col) != 0) { pivot = r; break; }
    if (pivot < 0) continue;
    if (pivot != row) m.row(pivot).swap(m.row(row));
    const Rational inv = Rational(1) / m(row, col);
    for (Eigen::Index r = row + 1; r < rows; ++r) {
      if (m(r, col) == 0) continue;
      const Rational f = m(r, col) * inv;
      for (Eigen::Index c = col; c < cols; ++c) m(r, c) -= f * m(row, c);
    }
    ++row;
    ++rank;
  }
  return rank;
}

RatMatrix inverse_exact(RatMatrix m) {
  const Eigen::Index n = m.rows();
  if (n != m.cols()) throw input_error("inverse of a non-square matrix");
  RatMatrix inv = RatMatrix::Identity(n, n);
  for (Eigen::Index col = 0; col < n; ++col) {
    Eigen::Index pivot = -1;
    for (Eigen::Index r = col; r < n; ++r)
      if (m(r, col) != 0) { pivot = r; break; }
    if (pivot < 0) throw input_error("singular matrix");
    if (pivot != col) {
      m.row(pivot).swap(m.row(col));
      inv.row(pivot).swap(inv.row(col));
    }
    const Rational d = m(col, col);
    m.row(col) /= d;
    inv.row(col) /= d;
    for (Eigen::Index r = 0; r < n; ++r) {
      if (r == col || m(r, col) == 0) continue;
      const Rational f = m(r, col);
      m.row(r) -= f * m.row(col);
      inv.row(r) -= f * inv.row(col);
    }
  }
  return inv;
}

}  // namespace pbgg
