#include "hilb2/hilbert.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "hilb2/fp.hpp"

namespace hilb2 {

MonomialFrame MonomialFrame::for_coords(int g) {
  if (g < 1) throw std::invalid_argument("frame needs at least one coordinate");
  MonomialFrame f;
  f.g = g;
  for (int i = 0; i < g; ++i)
    for (int j = i; j < g; ++j) f.monomials.emplace_back(i, j);
  return f;
}

Index MonomialFrame::index_of(int i, int j) const {
  if (i > j) std::swap(i, j);
  // Offset of the block of pairs starting with i, then j within the block.
  const Index base = Index(i) * g - Index(i) * (i - 1) / 2;
  return base + (j - i);
}

OnePS::OnePS(Eigen::VectorXi w) : weights(std::move(w)) {
  if (weights.sum() != 0) throw std::invalid_argument("one-parameter subgroup weights must sum to 0");
}

HilbertPoint2 make_hilbert_point(int g, const ProductRule& rule) {
  const MonomialFrame frame = MonomialFrame::for_coords(g);
  std::vector<VectorQ> cols;
  cols.reserve(frame.size());
  for (const auto& [i, j] : frame.monomials) {
    cols.push_back(rule(i, j));
    if (cols.back().size() != cols.front().size())
      throw std::invalid_argument("inconsistent coordinate lengths across products");
  }
  HilbertPoint2 h{frame, matrix_from_columns(cols)};
  h.rank = rank_of(h.eval);
  return h;
}

QuadricSpace kernel_quadrics(const HilbertPoint2& h) {
  return QuadricSpace{h.frame, kernel_of(h.eval)};
}

MatrixQ gram_matrix(const VectorQ& coeffs, const MonomialFrame& frame) {
  if (coeffs.size() != frame.size()) throw std::invalid_argument("coefficient/frame size mismatch");
  const int g = frame.g;
  MatrixQ gram = MatrixQ::Zero(g, g);
  for (Index k = 0; k < frame.size(); ++k) {
    const auto [i, j] = frame.monomials[k];
    if (i == j) {
      gram(i, i) = coeffs(k);
    } else {
      gram(i, j) = coeffs(k) / 2;
      gram(j, i) = gram(i, j);
    }
  }
  return gram;
}

int quadric_rank(const VectorQ& coeffs, const MonomialFrame& frame) {
  return static_cast<int>(rank_of(gram_matrix(coeffs, frame)));
}

namespace {

long greedy_basis_weight(const HilbertPoint2& h, const std::vector<long>& col_weight, bool maximize) {
  std::vector<Index> order(h.frame.size());
  std::iota(order.begin(), order.end(), Index(0));
  std::stable_sort(order.begin(), order.end(), [&](Index a, Index b) {
    return maximize ? col_weight[a] > col_weight[b] : col_weight[a] < col_weight[b];
  });
  RowSpace rs;
  long total = 0;
  for (Index c : order) {
    if (rs.dim() == h.rank) break;
    if (rs.insert(h.eval.col(c))) total += col_weight[c];
  }
  return total;
}

}  // namespace

WeightRange min_max_basis_weight(const HilbertPoint2& h, const OnePS& rho) {
  if (rho.size() != h.frame.g) throw std::invalid_argument("weight vector length != coordinate count");
  if (!h.is_valid_canonical())
    throw std::domain_error("invalid Hilbert point: evaluation rank " + std::to_string(h.rank) +
                            " != " + std::to_string(h.expected_rank()));
  std::vector<long> w(h.frame.size());
  for (Index k = 0; k < h.frame.size(); ++k) w[k] = rho.monomial_weight(h.frame.monomials[k]);
  return WeightRange{greedy_basis_weight(h, w, false), greedy_basis_weight(h, w, true)};
}

TorusVerdict torus_verdict(const HilbertPoint2& h, const OnePS& rho) {
  const WeightRange r = min_max_basis_weight(h, rho);
  return (r.min_weight > 0 || r.max_weight < 0) ? TorusVerdict::kDestabilizedBy
                                                : TorusVerdict::kNotDestabilizedByThisRho;
}

std::string to_string(TorusVerdict v) {
  return v == TorusVerdict::kDestabilizedBy ? "DestabilizedBy" : "NotDestabilizedByThisRho";
}

std::optional<RankSearchHit> rank_le3_basis_scan(const QuadricSpace& q) {
  for (const auto& v : q.basis) {
    const int r = quadric_rank(v, q.frame);
    if (r >= 1 && r <= 3) return RankSearchHit{v, r, true, {}};
  }
  return std::nullopt;
}

std::optional<RankSearchHit> rank_le3_exhaustive_fp(const QuadricSpace& q, std::int64_t p,
                                                    std::uint64_t cap) {
  const ZpField F(p);
  const Index dim = q.dim();
  if (dim == 0) return std::nullopt;
  if (dim > 7) throw std::invalid_argument("exhaustive mod-p search limited to kernel dimension <= 7");
  std::uint64_t points = 1;
  for (Index i = 0; i < dim; ++i) {
    points *= static_cast<std::uint64_t>(p);
    if (points > cap) throw std::invalid_argument("mod-p search space cap exceeded");
  }

  std::vector<MatrixFp> grams;
  grams.reserve(dim);
  for (const auto& v : q.basis) grams.push_back(reduce_mod(gram_matrix(v, q.frame), F));
  const int g = q.frame.g;

  // Projective points, lexicographically least representative first: the
  // leading nonzero coefficient is fixed to 1.
  std::vector<std::int64_t> combo(dim, 0);
  for (Index lead = 0; lead < dim; ++lead) {
    std::fill(combo.begin(), combo.end(), 0);
    combo[lead] = 1;
    bool done = false;
    while (!done) {
      MatrixFp gram = MatrixFp::Zero(g, g);
      for (Index i = lead; i < dim; ++i) {
        if (combo[i] == 0) continue;
        for (Index a = 0; a < g; ++a)
          for (Index b = 0; b < g; ++b) gram(a, b) = F.add(gram(a, b), F.mul(combo[i], grams[i](a, b)));
      }
      if (field_rref_rank_kernel(F, gram).rank <= 3) {
        // Lift with symmetric residues and re-check over Q.
        VectorQ lifted = VectorQ::Zero(q.frame.size());
        for (Index i = 0; i < dim; ++i) {
          std::int64_t c = combo[i];
          if (c > p / 2) c -= p;
          if (c != 0) lifted += Rational(c) * q.basis[i];
        }
        const int qrank = quadric_rank(lifted, q.frame);
        return RankSearchHit{lifted, qrank, qrank >= 1 && qrank <= 3, combo};
      }
      // Advance the tail (positions after `lead`) as a base-p counter.
      done = true;
      for (Index i = dim; i-- > lead + 1;) {
        if (++combo[i] < p) {
          done = false;
          break;
        }
        combo[i] = 0;
      }
    }
  }
  return std::nullopt;
}

}  // namespace hilb2
