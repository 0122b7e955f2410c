#ifndef HILB2_BIELLIPTIC_HPP
#define HILB2_BIELLIPTIC_HPP

#include <vector>

#include "hilb2/hilbert.hpp"
#include "hilb2/poly.hpp"

namespace hilb2 {

// Nonsingular Weierstrass curve y^2 = x^3 + A x + B.
struct WeierstrassCurve {
  Rational A, B;

  WeierstrassCurve(Rational A_, Rational B_);
  Rational discriminant_term() const { return 4 * A * A * A + 27 * B * B; }
};

// Element of the coordinate ring in canonical form a(x) + b(x) y, with y^2
// reduced via the curve equation. Pole order at infinity:
// max(2 deg a, 2 deg b + 3).
struct EllipticFunction {
  PolyQ a, b;

  bool is_zero() const { return a.is_zero() && b.is_zero(); }
  int pole_order() const;
};

EllipticFunction ef_mul(const WeierstrassCurve& E, const EllipticFunction& f,
                        const EllipticFunction& g);

// Basis of the functions with pole order <= n at infinity: 1, x, y, x^2, xy,
// x^3, x^2 y, ... — n functions with pole orders 0, 2, 3, ..., n.
std::vector<EllipticFunction> rr_basis(const WeierstrassCurve& E, int n);

// Quadrics through the elliptic normal curve of degree n in P^{n-1}:
// kernel of Sym^2 of the pole-order basis; dimension C(n+1,2) - 2n.
QuadricSpace quadrics_through_elliptic(const WeierstrassCurve& E, int n);

// Evaluation of the degree-n embedding itself (products in canonical form).
HilbertPoint2 elliptic_hilbert_point(const WeierstrassCurve& E, int n);

struct ConeWeightBound {
  long bound = 0;               // -(g-1)(g-6)
  long vertex_quadric_count = 0;  // C(g+1,2) - 3(g-1) - 1
  long per_quadric_weight = -2;
  long residual_weight_cap = 0;   // 2(g-1)
};

// Weight bookkeeping for the cone over an elliptic normal curve under
// rho = (-1, ..., -1, g-1).
ConeWeightBound cone_weight_bound(int g);

struct ConeAssembly {
  std::vector<VectorQ> lifted;  // quadrics in the g = 6 frame, no vertex variable
  long count = 0;
  bool all_vertex_singular = false;  // every Gram has a zero vertex row/column
  bool all_weights_minus_two = false;
  long expected_curve_kernel_dim = 0;
};

// Lifts the five quadrics through a degree-5 elliptic curve to P^5 and
// verifies they are singular at the cone vertex [0:...:0:1].
ConeAssembly cone_quadric_assembly(const WeierstrassCurve& E);

}  // namespace hilb2

#endif
