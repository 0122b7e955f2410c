#ifndef HILB2_HILBERT_HPP
#define HILB2_HILBERT_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "hilb2/linalg.hpp"
#include "hilb2/rational.hpp"

namespace hilb2 {

// Ordered list of the g(g+1)/2 degree-2 monomials x_i x_j (i <= j) in g
// coordinates; the fixed ambient frame for quadrics. Order is lexicographic
// in (i, j) and stable across the whole toolkit.
struct MonomialFrame {
  int g = 0;
  std::vector<std::pair<int, int>> monomials;

  static MonomialFrame for_coords(int g);

  Index size() const { return static_cast<Index>(monomials.size()); }
  Index index_of(int i, int j) const;
};

// Diagonal one-parameter subgroup: integer weights summing to zero.
struct OnePS {
  Eigen::VectorXi weights;

  explicit OnePS(Eigen::VectorXi w);
  static OnePS zero(int g) { return OnePS(Eigen::VectorXi::Zero(g)); }

  int size() const { return static_cast<int>(weights.size()); }
  long monomial_weight(const std::pair<int, int>& m) const {
    return long(weights(m.first)) + long(weights(m.second));
  }
  OnePS negated() const { return OnePS(-weights); }
};

// The degree-2 evaluation of a projective model: one column per frame
// monomial, holding the coordinates of the corresponding product of sections
// in some exact function-space basis. For a canonically embedded genus-g
// curve the column rank is 3g-3 and the kernel has dimension (g-2)(g-3)/2.
struct HilbertPoint2 {
  MonomialFrame frame;
  MatrixQ eval;
  Index rank = 0;  // column rank of eval, computed at construction

  Index expected_rank() const { return 3 * Index(frame.g) - 3; }
  Index kernel_dim() const { return frame.size() - rank; }
  bool is_valid_canonical() const { return rank == expected_rank(); }
};

// Any exact multiplication rule: (i, j) -> coordinates of section_i*section_j.
using ProductRule = std::function<VectorQ(int, int)>;

HilbertPoint2 make_hilbert_point(int g, const ProductRule& rule);

// Linear system of quadrics, given by coefficient vectors over the frame.
struct QuadricSpace {
  MonomialFrame frame;
  std::vector<VectorQ> basis;

  Index dim() const { return static_cast<Index>(basis.size()); }
};

// Quadrics vanishing on the model: the kernel of the evaluation.
QuadricSpace kernel_quadrics(const HilbertPoint2& h);

// Symmetric Gram matrix of a quadric: diagonal entries are the x_i^2
// coefficients, off-diagonal entries half the x_i x_j coefficients.
MatrixQ gram_matrix(const VectorQ& coeffs, const MonomialFrame& frame);
int quadric_rank(const VectorQ& coeffs, const MonomialFrame& frame);

struct WeightRange {
  long min_weight = 0;
  long max_weight = 0;
};

// Extremal total weights over all monomial bases (column bases of eval),
// by greedy matroid optimization: visit columns sorted by weight, keep the
// independent ones. Ties break by frame order. Throws when the evaluation
// rank is not 3g-3 (invalid Hilbert point).
WeightRange min_max_basis_weight(const HilbertPoint2& h, const OnePS& rho);

enum class TorusVerdict { kDestabilizedBy, kNotDestabilizedByThisRho };

// Destabilized exactly when 0 lies outside [min, max] of the basis weights.
// Symmetric under rho <-> -rho. Only the diagonal torus in the given frame
// is tested; this never certifies semistability under all of SL(g).
TorusVerdict torus_verdict(const HilbertPoint2& h, const OnePS& rho);

std::string to_string(TorusVerdict v);

struct RankSearchHit {
  VectorQ quadric;             // coefficients over the frame
  int rank = 0;                // Gram rank over Q (or mod p for a candidate)
  bool verified_over_q = true; // false for an unlifted mod-p candidate
  std::vector<std::int64_t> fp_combination;  // set by the mod-p search
};

// Scans the basis vectors for a nonzero quadric of Gram rank <= 3.
std::optional<RankSearchHit> rank_le3_basis_scan(const QuadricSpace& q);

// Enumerates all projective combinations of the basis over F_p in
// lexicographic order and reports the first with Gram rank <= 3 mod p,
// lifted back to Q (symmetric residues) and re-checked. A miss is evidence,
// not proof, of absence. Requires dim <= 7 and p^dim within the cap.
std::optional<RankSearchHit> rank_le3_exhaustive_fp(const QuadricSpace& q, std::int64_t p,
                                                    std::uint64_t cap = 20'000'000);

}  // namespace hilb2

#endif
