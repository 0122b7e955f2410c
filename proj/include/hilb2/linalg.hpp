#ifndef HILB2_LINALG_HPP
#define HILB2_LINALG_HPP

#include <stdexcept>
#include <utility>
#include <vector>

#include "hilb2/rational.hpp"

namespace hilb2 {

// Result of exact row reduction over Q.
struct RrefResult {
  Index rank = 0;
  std::vector<Index> pivot_cols;
  MatrixQ rref;                 // rank x cols, pivot entries equal to 1
  std::vector<VectorQ> kernel;  // m * v == 0 for every v; size == cols - rank
};

// Exact rank/kernel of a rational matrix. Rows are first scaled to integer
// entries, forward elimination is fraction-free (Bareiss), and pivots are
// normalized only at the end.
RrefResult rref_rank_kernel(const MatrixQ& m);

Index rank_of(const MatrixQ& m);
std::vector<VectorQ> kernel_of(const MatrixQ& m);

// Incrementally maintained row space of inserted vectors; the independence
// oracle behind the greedy basis search and all span comparisons.
class RowSpace {
 public:
  // Returns true when v enlarged the space (v independent of prior inserts).
  bool insert(VectorQ v);
  bool contains(VectorQ v) const;
  Index dim() const { return static_cast<Index>(rows_.size()); }

 private:
  // Reduces v against the stored echelon rows; returns its pivot, or -1.
  Index reduce(VectorQ& v) const;
  std::vector<std::pair<Index, VectorQ>> rows_;  // (pivot column, row), pivot entry 1
};

bool same_span(const std::vector<VectorQ>& a, const std::vector<VectorQ>& b);
Index span_dim(const std::vector<VectorQ>& vecs);

MatrixQ matrix_from_columns(const std::vector<VectorQ>& cols);
MatrixQ matrix_from_rows(const std::vector<VectorQ>& rows);

// --- Generic elimination over an arbitrary field -------------------------
//
// A Field policy supplies: Scalar, zero(), one(), is_zero(a), plus
// add/sub/mul/div/neg. Division-based Gauss-Jordan; used for F_p and Q(t),
// and cross-checked against the fraction-free Q path in the tests.

template <class Field>
struct FieldRref {
  using Scalar = typename Field::Scalar;
  Index rank = 0;
  std::vector<Index> pivot_cols;
  DenseMat<Scalar> rref;
  std::vector<DenseVec<Scalar>> kernel;
};

template <class Field>
FieldRref<Field> field_rref_rank_kernel(const Field& F, DenseMat<typename Field::Scalar> m) {
  using S = typename Field::Scalar;
  const Index rows = m.rows(), cols = m.cols();
  FieldRref<Field> out;
  Index r = 0;
  for (Index c = 0; c < cols && r < rows; ++c) {
    Index piv = -1;
    for (Index i = r; i < rows; ++i)
      if (!F.is_zero(m(i, c))) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != r) m.row(piv).swap(m.row(r));
    S inv = F.div(F.one(), m(r, c));
    for (Index j = c; j < cols; ++j) m(r, j) = F.mul(m(r, j), inv);
    for (Index i = 0; i < rows; ++i) {
      if (i == r || F.is_zero(m(i, c))) continue;
      S f = m(i, c);
      for (Index j = c; j < cols; ++j) m(i, j) = F.sub(m(i, j), F.mul(f, m(r, j)));
    }
    out.pivot_cols.push_back(c);
    ++r;
  }
  out.rank = r;
  out.rref = m.topRows(r);
  // Kernel basis: one vector per free column.
  std::vector<bool> is_pivot(cols, false);
  for (Index c : out.pivot_cols) is_pivot[c] = true;
  for (Index c = 0; c < cols; ++c) {
    if (is_pivot[c]) continue;
    DenseVec<S> v(cols);
    for (Index j = 0; j < cols; ++j) v(j) = F.zero();
    v(c) = F.one();
    for (Index i = 0; i < r; ++i) v(out.pivot_cols[i]) = F.neg(out.rref(i, c));
    out.kernel.push_back(std::move(v));
  }
  return out;
}

// Q as a field policy, for dual-route checks against rref_rank_kernel.
struct QField {
  using Scalar = Rational;
  Scalar zero() const { return Rational(0); }
  Scalar one() const { return Rational(1); }
  bool is_zero(const Scalar& a) const { return a.is_zero(); }
  Scalar add(const Scalar& a, const Scalar& b) const { return a + b; }
  Scalar sub(const Scalar& a, const Scalar& b) const { return a - b; }
  Scalar mul(const Scalar& a, const Scalar& b) const { return a * b; }
  Scalar div(const Scalar& a, const Scalar& b) const { return a / b; }
  Scalar neg(const Scalar& a) const { return -a; }
};

}  // namespace hilb2

#endif
