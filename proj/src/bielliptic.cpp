#include "hilb2/bielliptic.hpp"

#include <stdexcept>

namespace hilb2 {

WeierstrassCurve::WeierstrassCurve(Rational A_, Rational B_) : A(std::move(A_)), B(std::move(B_)) {
  if (discriminant_term().is_zero()) throw std::invalid_argument("singular Weierstrass curve");
}

int EllipticFunction::pole_order() const {
  int order = -1;  // pole order of the zero function is left at -1
  if (!a.is_zero()) order = 2 * a.degree();
  if (!b.is_zero()) order = std::max(order, 2 * b.degree() + 3);
  return order;
}

EllipticFunction ef_mul(const WeierstrassCurve& E, const EllipticFunction& f,
                        const EllipticFunction& g) {
  // (a1 + b1 y)(a2 + b2 y) = a1 a2 + b1 b2 (x^3 + Ax + B) + (a1 b2 + a2 b1) y.
  PolyQ cubic;
  cubic += PolyQ::monomial(3);
  cubic += PolyQ::monomial(1, E.A);
  cubic += PolyQ(E.B);
  return EllipticFunction{f.a * g.a + f.b * g.b * cubic, f.a * g.b + g.a * f.b};
}

std::vector<EllipticFunction> rr_basis(const WeierstrassCurve& E, int n) {
  if (n < 2) throw std::invalid_argument("rr_basis needs n >= 2");
  (void)E;
  std::vector<EllipticFunction> fns;
  fns.push_back(EllipticFunction{PolyQ(Rational(1)), PolyQ()});
  for (int order = 2; order <= n; ++order) {
    if (order % 2 == 0)
      fns.push_back(EllipticFunction{PolyQ::monomial(order / 2), PolyQ()});
    else
      fns.push_back(EllipticFunction{PolyQ(), PolyQ::monomial((order - 3) / 2)});
  }
  return fns;
}

HilbertPoint2 elliptic_hilbert_point(const WeierstrassCurve& E, int n) {
  if (n < 5) throw std::invalid_argument("elliptic quadrics need n >= 5");
  const auto basis = rr_basis(E, n);
  // Function space of pole order <= 2n: x^0..x^n and y x^0..y x^{n-2}.
  const int xrows = n + 1, yrows = n - 1;
  return make_hilbert_point(n, [&](int i, int j) {
    const EllipticFunction p = ef_mul(E, basis[i], basis[j]);
    if (p.a.degree() > n || p.b.degree() > n - 2)
      throw std::logic_error("product leaves the pole-order window");
    VectorQ v = VectorQ::Zero(xrows + yrows);
    for (int d = 0; d <= n; ++d) v(d) = p.a.coeff(d);
    for (int d = 0; d <= n - 2; ++d) v(xrows + d) = p.b.coeff(d);
    return v;
  });
}

QuadricSpace quadrics_through_elliptic(const WeierstrassCurve& E, int n) {
  return kernel_quadrics(elliptic_hilbert_point(E, n));
}

ConeWeightBound cone_weight_bound(int g) {
  if (g < 6) throw std::invalid_argument("cone weight bound needs g >= 6");
  ConeWeightBound r;
  const long gl = g;
  r.vertex_quadric_count = gl * (gl + 1) / 2 - 3 * (gl - 1) - 1;
  r.residual_weight_cap = 2 * (gl - 1);
  r.bound = r.per_quadric_weight * r.vertex_quadric_count + r.residual_weight_cap;
  // The closed form -(g-1)(g-6) is the same number; keep both routes.
  if (r.bound != -(gl - 1) * (gl - 6)) throw std::logic_error("cone weight bookkeeping mismatch");
  return r;
}

ConeAssembly cone_quadric_assembly(const WeierstrassCurve& E) {
  const int n = 5, g = 6;
  const QuadricSpace small = quadrics_through_elliptic(E, n);
  const MonomialFrame small_frame = MonomialFrame::for_coords(n);
  const MonomialFrame big_frame = MonomialFrame::for_coords(g);

  ConeAssembly out;
  out.count = small.dim();
  out.expected_curve_kernel_dim = big_frame.size() - (3 * g - 3);
  out.all_vertex_singular = true;
  out.all_weights_minus_two = true;

  Eigen::VectorXi w(g);
  w << -1, -1, -1, -1, -1, g - 1;
  const OnePS rho{w};

  for (const auto& q : small.basis) {
    VectorQ lifted = VectorQ::Zero(big_frame.size());
    for (Index idx = 0; idx < small_frame.size(); ++idx) {
      const auto [i, j] = small_frame.monomials[idx];
      lifted(big_frame.index_of(i, j)) = q(idx);
    }
    const MatrixQ gram = gram_matrix(lifted, big_frame);
    for (Index t = 0; t < g; ++t)
      if (!gram(g - 1, t).is_zero() || !gram(t, g - 1).is_zero()) out.all_vertex_singular = false;
    for (Index idx = 0; idx < big_frame.size(); ++idx)
      if (!lifted(idx).is_zero() && rho.monomial_weight(big_frame.monomials[idx]) != -2)
        out.all_weights_minus_two = false;
    out.lifted.push_back(std::move(lifted));
  }
  return out;
}

}  // namespace hilb2
