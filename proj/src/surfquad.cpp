#include "hilb2/surfquad.hpp"

#include <array>
#include <stdexcept>

#include "hilb2/linalg.hpp"

namespace hilb2 {

namespace {

constexpr int kMaxRetries = 100;

MultiPoly affine_const(const Rational& c) { return MultiPoly::constant(2, c); }

Rational eval_at(const MultiPoly& F, const std::pair<Rational, Rational>& p) {
  const std::array<Rational, 2> pt{p.first, p.second};
  return F.eval(pt);
}

TruncSeries shift_series(int order, const Rational& base) {
  TruncSeries s(order);
  s.coeff(0) = base;
  if (order > 1) s.coeff(1) = 1;
  return s;
}

// Expands F along the branch.
TruncSeries restrict_to_branch(const MultiPoly& F, const LocalBranch& gamma) {
  const std::array<TruncSeries, 2> pt{gamma.x, gamma.y};
  return F.eval_series<Rational>(pt);
}

}  // namespace

BidegreeCurve::BidegreeCurve(int c_, int d_, MultiPoly F_) : c(c_), d(d_), F(std::move(F_)) {
  if (F.is_zero()) throw std::invalid_argument("bidegree curve needs a nonzero form");
  if (F.arity() != 2) throw std::invalid_argument("bidegree form must live in two variables");
  if (F.degree_in(0) > c || F.degree_in(1) > d)
    throw std::invalid_argument("form exceeds the recorded bidegree");
}

ContactResult contact_order(const BidegreeCurve& F, const LocalBranch& gamma) {
  const TruncSeries e = restrict_to_branch(F.F, gamma);
  if (!e.coeff(0).is_zero()) throw std::invalid_argument("branch base point is not on the curve");
  const int v = e.valuation();
  if (v >= e.order()) return ContactResult{e.order(), true};
  return ContactResult{v, false};
}

TruncSeries newton_graph(const MultiPoly& G, int order) {
  if (G.arity() != 2) throw std::invalid_argument("newton_graph expects variables (u, s)");
  const std::array<Rational, 2> origin{Rational(0), Rational(0)};
  if (!G.eval(origin).is_zero()) throw std::invalid_argument("newton_graph: G(0,0) != 0");
  const MultiPoly Gu = G.derivative(0);
  if (Gu.eval(origin).is_zero()) throw std::invalid_argument("newton_graph: dG/du vanishes at 0");

  TruncSeries phi(order);
  const TruncSeries s = TruncSeries::monomial(order, 1);
  for (int it = 0; it < 64; ++it) {
    const std::array<TruncSeries, 2> pt{phi, s};
    const TruncSeries residual = G.eval_series<Rational>(pt);
    if (residual.is_zero()) return phi;
    phi = phi - residual * series_invert(Gu.eval_series<Rational>(pt));
  }
  throw std::logic_error("newton_graph did not converge");
}

LocalBranch smooth_branch(const BidegreeCurve& F, const std::pair<Rational, Rational>& p, int order,
                          bool over_x) {
  const MultiPoly u = MultiPoly::variable(2, 0);
  const MultiPoly s = MultiPoly::variable(2, 1);
  // Graph over y solves x = px + u(s); graph over x solves y = py + u(s).
  std::array<MultiPoly, 2> sub = over_x
                                     ? std::array<MultiPoly, 2>{affine_const(p.first) + s,
                                                                affine_const(p.second) + u}
                                     : std::array<MultiPoly, 2>{affine_const(p.first) + u,
                                                                affine_const(p.second) + s};
  const TruncSeries phi = newton_graph(F.F.compose(sub), order);
  const TruncSeries param = shift_series(order, over_x ? p.first : p.second);
  TruncSeries graph = phi;
  graph.coeff(0) = over_x ? p.second : p.first;
  return over_x ? LocalBranch{param, graph} : LocalBranch{graph, param};
}

LocalBranch nodal_branch(const BidegreeCurve& F, const std::pair<Rational, Rational>& p,
                         const Rational& slope, int order) {
  const MultiPoly u = MultiPoly::variable(2, 0);
  const MultiPoly s = MultiPoly::variable(2, 1);
  // x = px + slope*s + u*s, y = py + s; the quotient by s^2 exists exactly
  // when p is a singular point, and Newton applies when the slope is a
  // simple root of the tangent cone.
  const std::array<MultiPoly, 2> sub{affine_const(p.first) + MultiPoly::constant(2, slope) * s + u * s,
                                     affine_const(p.second) + s};
  const MultiPoly G = F.F.compose(sub).divided_by_power(1, 2);
  const TruncSeries phi = newton_graph(G, order);
  const TruncSeries sser = TruncSeries::monomial(order, 1);
  TruncSeries x = sser * phi;  // s * u(s)
  x.coeff(0) = p.first;
  x.coeff(1) = x.coeff(1) + slope;
  return LocalBranch{x, shift_series(order, p.second)};
}

ContactResult branch_contact(const LocalBranch& a, const LocalBranch& b) {
  TruncSeries diff(a.order());
  if (a.y == b.y)
    diff = a.x - b.x;
  else if (a.x == b.x)
    diff = a.y - b.y;
  else
    throw std::invalid_argument("branches are not parameterized over a common axis");
  const int v = diff.valuation();
  if (v >= diff.order()) return ContactResult{diff.order(), true};
  return ContactResult{v, false};
}

namespace {

// Coefficient layout of (1, d)-forms: A(y) + x B(y) with deg <= d, listed as
// the d+1 coefficients of A then the d+1 coefficients of B.
MultiPoly one_d_form(const VectorQ& coeffs, int d) {
  MultiPoly F(2);
  for (int j = 0; j <= d; ++j) {
    F.add_term({0, j}, coeffs(j));
    F.add_term({1, j}, coeffs(d + 1 + j));
  }
  return F;
}

VectorQ one_d_coeffs(const MultiPoly& F, int d) {
  VectorQ v = VectorQ::Zero(2 * (d + 1));
  for (int j = 0; j <= d; ++j) {
    v(j) = F.coeff({0, j});
    v(d + 1 + j) = F.coeff({1, j});
  }
  return v;
}

// Kernel of the "contact >= conditions" system for (1, d)-forms along gamma.
std::vector<VectorQ> contact_system_kernel(int d, const LocalBranch& gamma, int conditions) {
  MatrixQ m = MatrixQ::Zero(conditions, 2 * (d + 1));
  for (int j = 0; j <= d; ++j) {
    for (int e = 0; e <= 1; ++e) {
      MultiPoly mono = MultiPoly::monomial(2, {e, j});
      const std::array<TruncSeries, 2> pt{gamma.x, gamma.y};
      const TruncSeries expansion = mono.eval_series<Rational>(pt);
      for (int r = 0; r < conditions; ++r) m(r, e * (d + 1) + j) = expansion.coeff(r);
    }
  }
  return kernel_of(m);
}

// Nonvanishing of the formal resultant at degree d: the Sylvester matrix of
// A and B, both padded to degree d, has full rank 2d.
bool formal_resultant_nonzero(const PolyQ& A, const PolyQ& B, int d) {
  if (d == 0) return !A.is_zero() || !B.is_zero();
  MatrixQ syl = MatrixQ::Zero(2 * d, 2 * d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j <= d; ++j) {
      syl(i, i + j) = A.coeff(d - j);
      syl(d + i, i + j) = B.coeff(d - j);
    }
  return rank_of(syl) == 2 * d;
}

PolyQ univariate_in_y(const MultiPoly& F, int xdeg) {
  PolyQ p;
  const MultiPoly part = F.coeff_of(0, xdeg);
  for (const auto& [e, c] : part.terms()) p += PolyQ::monomial(e[1], c);
  return p;
}

}  // namespace

BidegreeCurve osculating_member(int k, const BidegreeCurve& c1, const std::pair<Rational, Rational>& p) {
  if (k < 1) throw std::invalid_argument("osculating_member needs k >= 1");
  if (!eval_at(c1.F, p).is_zero()) throw std::invalid_argument("base point is not on the curve");
  const std::array<Rational, 2> pt{p.first, p.second};
  if (c1.F.derivative(0).eval(pt).is_zero())
    throw std::invalid_argument("base point is a ramification point of the second projection");

  const int order = 2 * k + 6;
  const LocalBranch gamma = smooth_branch(c1, p, order);
  const auto kernel = contact_system_kernel(k, gamma, 2 * k + 1);
  if (kernel.size() != 1)
    throw std::domain_error("osculating contact system has solution dimension " +
                            std::to_string(kernel.size()) + ", expected 1");
  BidegreeCurve member(1, k, one_d_form(kernel.front(), k));
  if (!contact_order(member, gamma).exactly(2 * k + 1))
    throw std::domain_error("osculating member misses the exact contact order");
  if (!formal_resultant_nonzero(univariate_in_y(member.F, 0), univariate_in_y(member.F, 1), k))
    throw std::domain_error("osculating member is singular: resultant vanishes");
  return member;
}

AConstruction build_A_singular(int k, std::uint64_t seed) {
  if (k < 2) throw std::invalid_argument("build_A_singular needs k >= 2");
  Rng rng(seed);
  const int order = 8 * k + 10;
  const MultiPoly x = MultiPoly::variable(2, 0);
  const MultiPoly y = MultiPoly::variable(2, 1);
  const BidegreeCurve c1(2, 1, y - x * x);

  for (int attempt = 0; attempt < kMaxRetries; ++attempt) {
    const Rational c(rng.nonzero(-9, 9));
    const std::pair<Rational, Rational> p{c, c * c};
    BidegreeCurve c2(1, k, MultiPoly::constant(2, Rational(1)));
    try {
      c2 = osculating_member(k, c1, p);
    } catch (const std::domain_error&) {
      continue;
    }
    if (c2.F.derivative(0).eval(std::array<Rational, 2>{p.first, p.second}).is_zero()) continue;

    const LocalBranch g1 = smooth_branch(c1, p, order, /*over_x=*/true);
    const LocalBranch g2 = smooth_branch(c2, p, order);
    if (!contact_order(c2, g1).exactly(2 * k + 1)) continue;
    if (!contact_order(c1, g2).exactly(2 * k + 1)) continue;

    SingularityReport report;
    report.branch_count = 2;
    report.contacts = Eigen::MatrixXi::Zero(2, 2);
    report.contacts(0, 1) = report.contacts(1, 0) = 2 * k + 1;
    report.delta = 2 * k + 1;
    report.label = "A" + std::to_string(4 * k + 1);
    report.analytic_claim = "y^2 = x^" + std::to_string(4 * k + 2);
    report.label_from_contacts = true;
    report.note = "two smooth branches with contact m form an A_{2m-1} point";
    return AConstruction{c1, c2, p, std::move(report)};
  }
  throw std::runtime_error("build_A_singular: no non-degenerate base point found");
}

DConstruction build_D_singular(int k, std::uint64_t seed) {
  if (k < 2) throw std::invalid_argument("build_D_singular needs k >= 2");
  Rng rng(seed);
  const int order = 8 * k + 10;
  const MultiPoly x = MultiPoly::variable(2, 0);
  const MultiPoly y = MultiPoly::variable(2, 1);
  const std::pair<Rational, Rational> p{Rational(0), Rational(0)};

  for (int attempt = 0; attempt < kMaxRetries; ++attempt) {
    const Rational s1(rng.uniform(-4, 4));
    const Rational s2(rng.uniform(-4, 4));
    if (s1 == s2) continue;
    // Irreducible nodal (2,2) curve with rational transverse branches at p.
    const MultiPoly f1 = (x - MultiPoly::constant(2, s1) * y) * (x - MultiPoly::constant(2, s2) * y) +
                         x * x * y * y;
    const BidegreeCurve c1(2, 2, f1);
    const LocalBranch g1 = nodal_branch(c1, p, s1, order);
    const LocalBranch g2 = nodal_branch(c1, p, s2, order);

    const auto kernel = contact_system_kernel(k - 1, g2, 2 * k - 1);
    if (kernel.size() != 1) continue;
    const BidegreeCurve c2(1, k - 1, one_d_form(kernel.front(), k - 1));
    if (c2.F.derivative(0).eval(std::array<Rational, 2>{Rational(0), Rational(0)}).is_zero()) continue;
    const LocalBranch g3 = smooth_branch(c2, p, order);

    if (!contact_order(c2, g2).exactly(2 * k - 1)) continue;
    if (!branch_contact(g1, g2).exactly(1)) continue;
    if (!branch_contact(g1, g3).exactly(1)) continue;
    if (!branch_contact(g2, g3).exactly(2 * k - 1)) continue;

    SingularityReport report;
    report.branch_count = 3;
    report.contacts = Eigen::MatrixXi::Zero(3, 3);
    report.contacts(0, 1) = report.contacts(1, 0) = 1;
    report.contacts(0, 2) = report.contacts(2, 0) = 1;
    report.contacts(1, 2) = report.contacts(2, 1) = 2 * k - 1;
    report.delta = 2 * k + 1;
    report.label = "D" + std::to_string(4 * k);
    report.analytic_claim = "x(y^2 - x^" + std::to_string(4 * k - 2) + ")";
    report.label_from_contacts = true;
    report.note = "a transverse smooth branch plus two branches with contact c form a D_{2c+2} point";
    return DConstruction{c1, c2, p, std::move(report)};
  }
  throw std::runtime_error("build_D_singular: no non-degenerate configuration found");
}

TripleConstruction build_triple_point(int m, TripleFlavor flavor, std::uint64_t seed) {
  if (m < 1) throw std::invalid_argument("build_triple_point needs m >= 1");
  Rng rng(seed);
  const int target = flavor == TripleFlavor::kC ? 2 * m : 2 * m - 1;
  const int g = flavor == TripleFlavor::kC ? 6 * m - 2 : 6 * m - 4;
  const int order = 6 * m + 10;

  for (int attempt = 0; attempt < kMaxRetries; ++attempt) {
    const std::pair<Rational, Rational> p{Rational(rng.uniform(-4, 4)), Rational(rng.uniform(-4, 4))};
    // F1 = A1(y) + x with deg A1 = m exactly and A1(py) = -px.
    PolyQ a1 = PolyQ::monomial(m, Rational(rng.nonzero(-4, 4)));
    for (int j = 1; j < m; ++j) a1 += PolyQ::monomial(j, Rational(rng.uniform(-4, 4)));
    a1 += PolyQ(-p.first - a1.eval(p.second));
    MultiPoly f1(2);
    for (int j = 0; j <= m; ++j) f1.add_term({0, j}, a1.coeff(j));
    f1.add_term({1, 0}, Rational(1));
    const BidegreeCurve c1(1, m, f1);
    const LocalBranch g1 = smooth_branch(c1, p, order);
    const VectorQ f1vec = one_d_coeffs(f1, m);

    std::vector<BidegreeCurve> comps{c1};
    std::vector<LocalBranch> branches{g1};
    bool ok = true;

    if (flavor == TripleFlavor::kC) {
      const auto kernel = contact_system_kernel(m, g1, 2 * m);
      if (kernel.size() != 2) continue;
      RowSpace f1span;
      f1span.insert(f1vec);
      VectorQ other;
      bool found = false;
      for (const auto& v : kernel)
        if (!f1span.contains(v)) {
          other = v;
          found = true;
          break;
        }
      if (!found) continue;
      for (const VectorQ& cand : {other, VectorQ(other + f1vec)}) {
        const BidegreeCurve ci(1, m, one_d_form(cand, m));
        if (ci.F.derivative(0).eval(std::array<Rational, 2>{p.first, p.second}).is_zero()) {
          ok = false;
          break;
        }
        if (!contact_order(ci, g1).exactly(target)) {
          ok = false;
          break;
        }
        comps.push_back(ci);
        branches.push_back(smooth_branch(ci, p, order));
      }
    } else {
      // Flavor D: members of |O(1,m)| and |O(1,m-1)| with contact 2m-1.
      const auto kernel_m = contact_system_kernel(m, g1, 2 * m - 1);
      if (kernel_m.size() != 3) continue;
      RowSpace f1span;
      f1span.insert(f1vec);
      bool found = false;
      for (const auto& v : kernel_m) {
        if (f1span.contains(v)) continue;
        const BidegreeCurve ci(1, m, one_d_form(v, m));
        if (ci.F.derivative(0).eval(std::array<Rational, 2>{p.first, p.second}).is_zero()) continue;
        if (!contact_order(ci, g1).exactly(target)) continue;
        comps.push_back(ci);
        branches.push_back(smooth_branch(ci, p, order));
        found = true;
        break;
      }
      if (!found) continue;
      const auto kernel_low = contact_system_kernel(m - 1, g1, 2 * m - 1);
      if (kernel_low.size() != 1) continue;
      const BidegreeCurve c3(1, m - 1, one_d_form(kernel_low.front(), m - 1));
      if (c3.F.derivative(0).eval(std::array<Rational, 2>{p.first, p.second}).is_zero()) continue;
      if (!contact_order(c3, g1).exactly(target)) continue;
      comps.push_back(c3);
      branches.push_back(smooth_branch(c3, p, order));
    }
    if (!ok || comps.size() != 3) continue;

    Eigen::MatrixXi contacts = Eigen::MatrixXi::Zero(3, 3);
    for (int i = 0; i < 3 && ok; ++i)
      for (int j = i + 1; j < 3 && ok; ++j) {
        const ContactResult c = branch_contact(branches[i], branches[j]);
        if (!c.exactly(target)) ok = false;
        contacts(i, j) = contacts(j, i) = c.order;
      }
    if (!ok) continue;

    SingularityReport report;
    report.branch_count = 3;
    report.contacts = contacts;
    report.delta = 3L * target;
    report.label = "triple point";
    report.analytic_claim =
        "y^3 = x^" + std::to_string(flavor == TripleFlavor::kC ? g + 2 : g + 1);
    report.label_from_contacts = false;
    report.note = flavor == TripleFlavor::kC
                      ? "analytic type recorded from the construction, certified only via contacts"
                      : "three-branch realization with pairwise contact 2m-1; analytic type recorded, "
                        "not certified";
    return TripleConstruction{std::move(comps), p, std::move(report)};
  }
  throw std::runtime_error("build_triple_point: no non-degenerate configuration found");
}

ParamEReport verify_param_e(int m) {
  if (m < 1) throw std::invalid_argument("verify_param_e needs m >= 1");
  const int order = 12 * m + 12;
  const TruncSeries x = TruncSeries::monomial(order, 3);
  TruncSeries denom = TruncSeries::constant(order, Rational(1)) - TruncSeries::monomial(order, 3 * m + 1);
  const TruncSeries y = TruncSeries::monomial(order, 3 * m) * series_invert(denom);

  const TruncSeries lhs = (y - x.pow(m)).pow(3) - x.pow(3 * m + 1) * y.pow(3);
  ParamEReport report;
  report.identity_holds = lhs.is_zero();
  report.vanishing_order = (y - x.pow(m)).valuation();
  report.checked_order = order - 1;
  return report;
}

HilbertPoint2 a_curve_hilbert_point(const AConstruction& built, int k) {
  // C1 = {y = x^2} is parameterized as (s, s^2); C2 = {A(y) + x B(y) = 0} as
  // (-A(s)/B(s), s), with coordinates on C2 cleared by the denominator B^2.
  const PolyQ A = univariate_in_y(built.c2.F, 0);
  const PolyQ B = univariate_in_y(built.c2.F, 1);

  std::vector<PolyQ> on_c1, on_c2;
  for (int e = 0; e <= 1; ++e)
    for (int j = 0; j < k; ++j) {
      on_c1.push_back(PolyQ::monomial(e + 2 * j));
      PolyQ numer = PolyQ::monomial(j);
      numer = e == 1 ? numer * -A : numer * B;
      on_c2.push_back(numer);
    }
  const int deg = 4 * k - 1;  // product degree bound + 1 on each component
  return make_hilbert_point(2 * k, [&](int i, int j) {
    const PolyQ p1 = on_c1[i] * on_c1[j];
    const PolyQ p2 = on_c2[i] * on_c2[j];
    VectorQ v = VectorQ::Zero(2 * deg);
    for (int d = 0; d < deg; ++d) {
      v(d) = p1.coeff(d);
      v(deg + d) = p2.coeff(d);
    }
    return v;
  });
}

KernelMatchReport curve_vs_scroll_kernel(int k, std::uint64_t seed) {
  if (k < 2) throw std::invalid_argument("curve_vs_scroll_kernel needs k >= 2");
  const int g = 2 * k;
  KernelMatchReport report;

  // P^1 x P^1 embedded by the bidegree (1, k-1) monomials, ordered to match
  // the S_{k-1,k-1} chart sections under u -> y, w -> x.
  std::vector<MultiPoly> sections;
  for (int j = 0; j < k; ++j) sections.push_back(MultiPoly::monomial(2, {0, j}));
  for (int j = 0; j < k; ++j) sections.push_back(MultiPoly::monomial(2, {1, j}));
  const HilbertPoint2 surf = hilbert_point_from_polys(sections);
  const QuadricSpace surf_kernel = kernel_quadrics(surf);
  const QuadricSpace minors = scroll_minor_ideal(ScrollParams(k - 1, k - 1));
  report.surface_rank = surf.rank;
  report.surface_kernel_dim = surf_kernel.dim();
  report.surface_matches_minors = same_span(surf_kernel.basis, minors.basis);

  // The singular A-curve's canonical embedding.
  const AConstruction built = build_A_singular(k, seed);
  const HilbertPoint2 curve = a_curve_hilbert_point(built, k);
  report.curve_rank = curve.rank;
  const QuadricSpace curve_kernel = kernel_quadrics(curve);
  report.curve_kernel_dim = curve_kernel.dim();
  report.curve_matches_minors = same_span(curve_kernel.basis, minors.basis);
  return report;
}

}  // namespace hilb2
