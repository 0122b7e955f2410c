#ifndef HILB2_SCROLL_HPP
#define HILB2_SCROLL_HPP

#include <vector>

#include "hilb2/hilbert.hpp"
#include "hilb2/multipoly.hpp"

namespace hilb2 {

// Rational normal surface scroll S_{a,b} in P^{g-1}, g = a + b + 2.
// Cones (a or b zero) are excluded.
struct ScrollParams {
  int a = 1, b = 1;

  ScrollParams(int a_, int b_);
  int genus() const { return a + b + 2; }
  int maroni() const { return a >= b ? a - b : b - a; }
};

// Affine chart sections: {u^i : 0 <= i <= a} then {w u^j : 0 <= j <= b},
// polynomials in (u, w). Every 2x2 minor of the scroll matrix vanishes
// identically on them.
struct ScrollChart {
  ScrollParams params;
  std::vector<MultiPoly> sections;
};

ScrollChart scroll_sections(const ScrollParams& p);

// Span of the 2x2 minors of the 2 x (a+b) matrix with columns
// (x_i, x_{i+1}), i < a, and (y_j, y_{j+1}), j < b; dimension C(g-2, 2).
QuadricSpace scroll_minor_ideal(const ScrollParams& p);

// The destabilizing torus: weight -(b+1) on the x block, a+1 on the y block.
OnePS scroll_rho(const ScrollParams& p);

// Common rho-weight of every monomial basis of H^0(S_{a,b}, O(2)).
long scroll_weight(const ScrollParams& p);
// Same value by the term-by-term bookkeeping 2(b+1)C(a,2) - 2(a+1)C(b,2) - ab(a-b).
long scroll_weight_expanded(const ScrollParams& p);

// Scroll cut out by the quadrics through a trigonal curve of genus g with
// Maroni invariant m: S_{(g+m)/2 - 1, (g-m)/2 - 1}.
ScrollParams maroni_scroll(int g, int m);

// The six degree-2 monomials in three variables: P^2 in P^5.
std::vector<MultiPoly> veronese_sections();

// Degree-2 evaluation of arbitrary polynomial sections; the function basis
// is the (deterministically ordered) set of monomials of all products.
HilbertPoint2 hilbert_point_from_polys(const std::vector<MultiPoly>& sections);

HilbertPoint2 scroll_hilbert_point(const ScrollParams& p);
HilbertPoint2 veronese_hilbert_point();

}  // namespace hilb2

#endif
