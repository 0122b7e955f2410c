#ifndef HILB2_CRIMP_HPP
#define HILB2_CRIMP_HPP

#include <span>
#include <vector>

#include "hilb2/hilbert.hpp"
#include "hilb2/multipoly.hpp"
#include "hilb2/poly.hpp"
#include "hilb2/ratfunc.hpp"

namespace hilb2 {

// Gluing datum y -> a_1 x + ... + a_g x^g (a_1 != 0) identifying length-(g+1)
// subschemes of two rational branches; defines an A_{2g+1}-rational curve.
struct CrimpingDatum {
  int g;
  std::vector<Rational> a;

  CrimpingDatum(int g_, std::vector<Rational> a_);
};

// Gluing unit of the dualizing bundle: unit kappa in Q[x]/(x^{g+1}) with
// constant term 1 and vanishing x^g coefficient.
struct GluingUnit {
  TruncSeries kappa;  // order g + 1
};

// Solves, by back-substitution from n = g-1 down to 1, the conditions that
// the x^g coefficient of kappa * y(x)^n vanishes for n = 0, ..., g-1.
// Generic in the coefficient field so the deformation parameter t can be
// carried symbolically (S = Rational or RatFuncQ).
template <class S>
Series<S> kappa_from_crimping_coeffs(int g, std::span<const S> a) {
  if (a.size() != static_cast<size_t>(g)) throw std::invalid_argument("crimping must have g entries");
  if (a[0] == S(0)) throw std::invalid_argument("crimping requires a_1 != 0");
  const int order = g + 1;
  Series<S> y(order);
  for (int j = 1; j <= g; ++j) y.coeff(j) = a[j - 1];

  std::vector<Series<S>> ypow;
  ypow.reserve(g);
  ypow.push_back(Series<S>::constant(order, S(1)));
  for (int n = 1; n < g; ++n) ypow.push_back(ypow.back() * y);

  Series<S> kappa = Series<S>::constant(order, S(1));
  for (int n = g - 1; n >= 1; --n) {
    // Unknowns above x^{g-n} multiply coefficients below x^n of y^n, which
    // vanish, so the partial sum already has every contribution but k_{g-n}.
    S s(0);
    for (int i = 0; i < g - n; ++i) s += kappa.coeff(i) * ypow[n].coeff(g - i);
    kappa.coeff(g - n) = -s / ypow[n].coeff(n);
  }
  return kappa;
}

GluingUnit kappa_from_crimping(const CrimpingDatum& c);

// Closed form for the first coefficient: k_1 = -(g-1) a_2 / a_1.
Rational kappa_k1_closed_form(const CrimpingDatum& c);

// True when the x^g coefficient of kappa * y(x)^n vanishes for all
// 0 <= n <= g-1 (the defining property of the gluing unit).
bool kappa_defining_property_holds(const CrimpingDatum& c, const TruncSeries& kappa);

// Canonical section on the two branches: a polynomial of degree <= g-1 on
// each, with f(x) = kappa(x) * h(y(x)) mod x^{g+1}.
struct SectionPair {
  PolyQ on_x;  // f, branch with uniformizer x
  PolyQ on_y;  // h, branch with uniformizer y
};

// The g pairs with h = 1, y, ..., y^{g-1}; verified linearly independent.
std::vector<SectionPair> canonical_sections(const CrimpingDatum& c);

// Products of section pairs taken branchwise (degree <= 2g-2 on each branch).
HilbertPoint2 crimped_hilbert_point(const CrimpingDatum& c);

// --- Balanced ribbon (genus g = 2k+1) -------------------------------------

// z_i = u^i for i <= k, z_i = u^i + (i-k) u^{i-k-1} eps for k < i <= 2k.
std::vector<DualPoly> ribbon_sections(int k);

HilbertPoint2 ribbon_hilbert_point(int k);

// psi_i = (w^i, y^{-i}) for i <= k and (w^i + (i-k) w^{i-k-1} t, y^{-i}) for
// i > k: the rescaled sections of the crimped family y -> x - t x^{k+2}.
// First components are polynomials in (w, t); the second component is the
// Laurent monomial y^{-i}.
struct PsiSection {
  MultiPoly first;  // variables (w, t)
  int y_exponent;   // stores i, the section restricting to y^{-i}
};

std::vector<PsiSection> psi_sections(int k);

struct FlatLimitReport {
  bool identities_hold = false;
  std::vector<int> failing_indices;
  Index family_kernel_dim = 0;  // over Q(t)
  Index ribbon_kernel_dim = 0;
  bool limit_spans_ribbon_kernel = false;

  bool ok() const { return identities_hold && limit_spans_ribbon_kernel; }
};

// Checks the two identity families
//   psi_{k+i+1} psi_0 - psi_{k+i} psi_1 = (w^i t, 0),   0 <= i <= k-1,
//   psi_{2k} psi_{i-k+1} - psi_{2k-1} psi_{i-k+2} = (w^i t, 0),  k <= i <= 2k-2,
// as exact polynomial identities, then verifies that the t -> 0 limit of the
// quadric relation space of the psi products equals the ribbon relation space.
FlatLimitReport flat_limit_identities(int k);

}  // namespace hilb2

#endif
