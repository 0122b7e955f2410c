#ifndef HILB2_SURFQUAD_HPP
#define HILB2_SURFQUAD_HPP

#include <string>
#include <utility>
#include <vector>

#include "hilb2/hilbert.hpp"
#include "hilb2/multipoly.hpp"
#include "hilb2/poly.hpp"
#include "hilb2/scroll.hpp"

namespace hilb2 {

// Affine chart of a curve of bidegree (c, d) on P^1 x P^1; variables (x, y).
struct BidegreeCurve {
  int c = 0, d = 0;
  MultiPoly F{2};

  BidegreeCurve(int c_, int d_, MultiPoly F_);
};

// Parameterized branch (x(s), y(s)) with base point (x(0), y(0)). The
// truncation order doubles as the precision certificate for contact orders.
struct LocalBranch {
  TruncSeries x, y;

  std::pair<Rational, Rational> base() const { return {x.coeff(0), y.coeff(0)}; }
  int order() const { return x.order(); }
};

struct ContactResult {
  int order = 0;
  bool at_least = false;  // true: F vanishes on the branch to full precision

  bool exactly(int n) const { return !at_least && order == n; }
};

// Vanishing order of F along the branch. Orders are certified only when
// strictly below the branch precision; otherwise at_least is set.
ContactResult contact_order(const BidegreeCurve& F, const LocalBranch& gamma);

// Solves u(s) with G(u(s), s) = 0, u(0) = 0, by series Newton iteration.
// Requires G(0,0) = 0 and dG/du (0,0) != 0.
TruncSeries newton_graph(const MultiPoly& G, int order);

// Branch of F at p as a graph over y (x = px + u(s), y = py + s); needs
// dF/dx (p) != 0. With over_x the roles of the variables swap.
LocalBranch smooth_branch(const BidegreeCurve& F, const std::pair<Rational, Rational>& p, int order,
                          bool over_x = false);

// Branch of a nodal curve at p with tangent x - px = slope * (y - py);
// the slope must be a simple root of the tangent cone.
LocalBranch nodal_branch(const BidegreeCurve& F, const std::pair<Rational, Rational>& p,
                         const Rational& slope, int order);

// Contact of two branches parameterized over the same axis coordinate.
ContactResult branch_contact(const LocalBranch& a, const LocalBranch& b);

// Unique member of |O(1,k)| with contact 2k+1 to C1 (class (2,1)) at p.
// Errors when p is a ramification point of the second projection, when the
// contact linear system has dimension != 1, or when the member fails the
// contact/smoothness postconditions.
BidegreeCurve osculating_member(int k, const BidegreeCurve& c1, const std::pair<Rational, Rational>& p);

struct SingularityReport {
  int branch_count = 0;
  Eigen::MatrixXi contacts;    // pairwise contact orders, zero diagonal
  long delta = 0;              // sum of pairwise contacts (smooth branches)
  std::string label;           // e.g. "A9", "D8", "ordinary-like triple point"
  std::string analytic_claim;  // recorded normal form, e.g. "y^2 = x^10"
  bool label_from_contacts = false;  // label derived from the documented contact rule
  std::string note;
};

struct AConstruction {
  BidegreeCurve c1, c2;  // classes (2,1) and (1,k); union has class (3, k+1)
  std::pair<Rational, Rational> p;
  SingularityReport report;
};

// Two smooth branches with contact 2k+1: an A_{4k+1} point (genus g = 2k).
AConstruction build_A_singular(int k, std::uint64_t seed);

struct DConstruction {
  BidegreeCurve c1, c2;  // nodal (2,2) and (1,k-1)
  std::pair<Rational, Rational> p;
  SingularityReport report;
};

// Transverse node plus a branch tangent to one of its branches with contact
// 2k-1: a D_{4k} point (genus g = 2k).
DConstruction build_D_singular(int k, std::uint64_t seed);

enum class TripleFlavor { kC, kD };

struct TripleConstruction {
  std::vector<BidegreeCurve> components;
  std::pair<Rational, Rational> p;
  SingularityReport report;
};

// Three smooth branches through one point. Flavor C: three (1,m) curves,
// pairwise contact 2m, recorded claim y^3 = x^{g+2} with g = 6m-2. Flavor D:
// classes (1,m), (1,m), (1,m-1), pairwise contact 2m-1, recorded claim
// y^3 = x^{g+1} with g = 6m-4. Labels are recorded claims, not certified.
TripleConstruction build_triple_point(int m, TripleFlavor flavor, std::uint64_t seed);

struct ParamEReport {
  bool identity_holds = false;
  int vanishing_order = 0;  // of y - x^m along the parameterization
  int checked_order = 0;

  bool ok(int m) const { return identity_holds && vanishing_order == 6 * m + 1; }
};

// The rational parameterization x = t^3, y = t^{3m}/(1 - t^{3m+1}) of
// (y - x^m)^3 - x^{3m+1} y^3 = 0, checked to truncation order 12m+11.
ParamEReport verify_param_e(int m);

struct KernelMatchReport {
  Index surface_rank = 0;          // dimension of the bidegree-(2, 2k-2) image
  Index surface_kernel_dim = 0;
  Index curve_rank = 0;
  Index curve_kernel_dim = 0;
  bool surface_matches_minors = false;
  bool curve_matches_minors = false;

  bool ok(int k) const {
    return surface_matches_minors && curve_matches_minors && curve_rank == 6 * k - 3;
  }
};

// P^1 x P^1 embedded by |O(1, k-1)|: the quadric kernel equals the span of
// the balanced scroll minors, and the singular curve of build_A_singular has
// the same kernel under its canonical embedding.
KernelMatchReport curve_vs_scroll_kernel(int k, std::uint64_t seed);

// Canonical embedding of the singular A-curve C1 u C2, via the restriction
// of |O(1, k-1)| to the two (globally rational) components.
HilbertPoint2 a_curve_hilbert_point(const AConstruction& built, int k);

}  // namespace hilb2

#endif
