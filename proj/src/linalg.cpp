#include "hilb2/linalg.hpp"

#include <boost/multiprecision/gmp.hpp>

namespace hilb2 {

namespace {

// Scales each row to integer entries with content 1. Row scaling by a
// nonzero constant preserves rank, row space, and kernel.
void normalize_rows(MatrixQ& m) {
  using boost::multiprecision::gcd;
  using boost::multiprecision::lcm;
  for (Index i = 0; i < m.rows(); ++i) {
    Integer l = 1;
    for (Index j = 0; j < m.cols(); ++j)
      if (!m(i, j).is_zero()) l = lcm(l, denom(m(i, j)));
    if (l != 1)
      for (Index j = 0; j < m.cols(); ++j) m(i, j) *= Rational(l);
    Integer g = 0;
    for (Index j = 0; j < m.cols(); ++j)
      if (!m(i, j).is_zero()) g = gcd(g, numer(m(i, j)));
    if (g > 1) {
      Rational inv(Integer(1), g);
      for (Index j = 0; j < m.cols(); ++j) m(i, j) *= inv;
    }
  }
}

}  // namespace

RrefResult rref_rank_kernel(const MatrixQ& input) {
  MatrixQ m = input;
  const Index rows = m.rows(), cols = m.cols();
  normalize_rows(m);

  // Fraction-free forward elimination: after the step with pivot p_r, every
  // entry is divided exactly by the previous pivot, so all intermediate
  // values are (integer) minors of the scaled matrix.
  std::vector<Index> pivot_cols;
  Rational prev(1);
  Index r = 0;
  for (Index c = 0; c < cols && r < rows; ++c) {
    Index piv = -1;
    for (Index i = r; i < rows; ++i)
      if (!m(i, c).is_zero()) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != r) m.row(piv).swap(m.row(r));
    const Rational p = m(r, c);
    for (Index i = r + 1; i < rows; ++i) {
      const Rational f = m(i, c);
      for (Index j = c; j < cols; ++j) m(i, j) = (m(i, j) * p - m(r, j) * f) / prev;
    }
    prev = p;
    pivot_cols.push_back(c);
    ++r;
  }

  RrefResult out;
  out.rank = r;
  out.pivot_cols = pivot_cols;

  // Normalize at the end: make pivots 1 and eliminate above them.
  MatrixQ rr = m.topRows(r);
  for (Index i = 0; i < r; ++i) {
    const Rational inv = Rational(1) / rr(i, pivot_cols[i]);
    for (Index j = pivot_cols[i]; j < cols; ++j) rr(i, j) *= inv;
  }
  for (Index i = r; i-- > 0;) {
    for (Index k = 0; k < i; ++k) {
      const Rational f = rr(k, pivot_cols[i]);
      if (f.is_zero()) continue;
      for (Index j = pivot_cols[i]; j < cols; ++j) rr(k, j) -= f * rr(i, j);
    }
  }
  out.rref = rr;

  std::vector<bool> is_pivot(cols, false);
  for (Index c : pivot_cols) is_pivot[c] = true;
  for (Index c = 0; c < cols; ++c) {
    if (is_pivot[c]) continue;
    VectorQ v = VectorQ::Zero(cols);
    v(c) = 1;
    for (Index i = 0; i < r; ++i) v(pivot_cols[i]) = -rr(i, c);
    out.kernel.push_back(std::move(v));
  }
  return out;
}

Index rank_of(const MatrixQ& m) { return rref_rank_kernel(m).rank; }

std::vector<VectorQ> kernel_of(const MatrixQ& m) { return rref_rank_kernel(m).kernel; }

Index RowSpace::reduce(VectorQ& v) const {
  for (const auto& [piv, row] : rows_) {
    if (!v(piv).is_zero()) v -= v(piv) * row;
  }
  for (Index j = 0; j < v.size(); ++j)
    if (!v(j).is_zero()) return j;
  return -1;
}

bool RowSpace::insert(VectorQ v) {
  const Index piv = reduce(v);
  if (piv < 0) return false;
  v /= v(piv);
  // Keep stored rows reduced against the new one.
  for (auto& [p, row] : rows_)
    if (!row(piv).is_zero()) row -= row(piv) * v;
  rows_.emplace_back(piv, std::move(v));
  return true;
}

bool RowSpace::contains(VectorQ v) const { return reduce(v) < 0; }

Index span_dim(const std::vector<VectorQ>& vecs) {
  RowSpace rs;
  for (const auto& v : vecs) rs.insert(v);
  return rs.dim();
}

bool same_span(const std::vector<VectorQ>& a, const std::vector<VectorQ>& b) {
  RowSpace ra;
  for (const auto& v : a) ra.insert(v);
  for (const auto& v : b)
    if (!ra.contains(v)) return false;
  return ra.dim() == span_dim(b);
}

MatrixQ matrix_from_columns(const std::vector<VectorQ>& cols) {
  if (cols.empty()) return MatrixQ(0, 0);
  MatrixQ m(cols.front().size(), static_cast<Index>(cols.size()));
  for (Index j = 0; j < m.cols(); ++j) {
    if (cols[j].size() != m.rows()) throw std::invalid_argument("matrix_from_columns: ragged input");
    m.col(j) = cols[j];
  }
  return m;
}

MatrixQ matrix_from_rows(const std::vector<VectorQ>& rows) {
  return matrix_from_columns(rows).transpose();
}

Rational rational_from_string(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  return Rational(s);
}

}  // namespace hilb2
