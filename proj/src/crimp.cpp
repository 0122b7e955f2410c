#include "hilb2/crimp.hpp"

#include <stdexcept>

namespace hilb2 {

CrimpingDatum::CrimpingDatum(int g_, std::vector<Rational> a_) : g(g_), a(std::move(a_)) {
  if (g < 4) throw std::invalid_argument("crimping genus must be at least 4");
  if (a.size() != static_cast<size_t>(g)) throw std::invalid_argument("crimping must have g entries");
  if (a[0].is_zero()) throw std::invalid_argument("crimping requires a_1 != 0");
}

GluingUnit kappa_from_crimping(const CrimpingDatum& c) {
  return GluingUnit{kappa_from_crimping_coeffs<Rational>(c.g, c.a)};
}

Rational kappa_k1_closed_form(const CrimpingDatum& c) { return -(c.g - 1) * c.a[1] / c.a[0]; }

namespace {

TruncSeries crimping_series(const CrimpingDatum& c) {
  TruncSeries y(c.g + 1);
  for (int j = 1; j <= c.g; ++j) y.coeff(j) = c.a[j - 1];
  return y;
}

}  // namespace

bool kappa_defining_property_holds(const CrimpingDatum& c, const TruncSeries& kappa) {
  const TruncSeries y = crimping_series(c);
  TruncSeries acc = kappa;
  for (int n = 0; n < c.g; ++n) {
    if (!acc.coeff(c.g).is_zero()) return false;
    acc = acc * y;
  }
  return true;
}

std::vector<SectionPair> canonical_sections(const CrimpingDatum& c) {
  const int g = c.g;
  const TruncSeries y = crimping_series(c);
  const TruncSeries kappa = kappa_from_crimping(c).kappa;

  std::vector<SectionPair> sections;
  TruncSeries acc = kappa;  // kappa * y^n
  for (int n = 0; n < g; ++n) {
    if (!acc.coeff(g).is_zero())
      throw std::logic_error("gluing unit lost the degree bound at n = " + std::to_string(n));
    sections.push_back(SectionPair{acc.to_poly(), PolyQ::monomial(n)});
    acc = acc * y;
  }

  // The solution space of the compatibility congruence must have dimension
  // exactly g; anything else signals an arithmetic bug.
  std::vector<VectorQ> rows;
  for (const auto& s : sections) {
    VectorQ v = VectorQ::Zero(2 * g);
    for (int i = 0; i < g; ++i) {
      v(i) = s.on_x.coeff(i);
      v(g + i) = s.on_y.coeff(i);
    }
    rows.push_back(std::move(v));
  }
  if (span_dim(rows) != g) throw std::logic_error("canonical sections are not independent");
  return sections;
}

HilbertPoint2 crimped_hilbert_point(const CrimpingDatum& c) {
  const int g = c.g;
  const auto sections = canonical_sections(c);
  const int deg = 2 * g - 1;  // product degree bound + 1 coefficients per branch
  return make_hilbert_point(g, [&](int i, int j) {
    const PolyQ fx = sections[i].on_x * sections[j].on_x;
    const PolyQ hy = sections[i].on_y * sections[j].on_y;
    VectorQ v = VectorQ::Zero(2 * deg);
    for (int d = 0; d < deg; ++d) {
      v(d) = fx.coeff(d);
      v(deg + d) = hy.coeff(d);
    }
    return v;
  });
}

std::vector<DualPoly> ribbon_sections(int k) {
  if (k < 2) throw std::invalid_argument("ribbon parameter k must be at least 2");
  std::vector<DualPoly> z;
  for (int i = 0; i <= 2 * k; ++i) {
    DualPoly s{PolyQ::monomial(i), PolyQ()};
    if (i >= k + 1) s.eps = PolyQ::monomial(i - k - 1, Rational(i - k));
    z.push_back(std::move(s));
  }
  return z;
}

HilbertPoint2 ribbon_hilbert_point(int k) {
  const auto z = ribbon_sections(k);
  const int g = 2 * k + 1;
  const int deg = 4 * k + 1;  // u-degree bound + 1 of products
  return make_hilbert_point(g, [&](int i, int j) {
    const DualPoly p = z[i] * z[j];
    VectorQ v = VectorQ::Zero(2 * deg);
    for (int d = 0; d < deg; ++d) {
      v(d) = p.base.coeff(d);
      v(deg + d) = p.eps.coeff(d);
    }
    return v;
  });
}

std::vector<PsiSection> psi_sections(int k) {
  if (k < 2) throw std::invalid_argument("psi sections need k >= 2");
  std::vector<PsiSection> psi;
  for (int i = 0; i <= 2 * k; ++i) {
    MultiPoly first = MultiPoly::monomial(2, {i, 0});
    if (i >= k + 1) first += MultiPoly::monomial(2, {i - k - 1, 1}, Rational(i - k));
    psi.push_back(PsiSection{std::move(first), i});
  }
  return psi;
}

namespace {

// Entries of one cleared kernel vector, as polynomials in t.
using PolyVec = std::vector<PolyQ>;

PolyVec clear_denominators(const VectorQt& v) {
  PolyQ l(Rational(1));
  for (Index i = 0; i < v.size(); ++i)
    if (!v(i).is_zero()) l = poly_lcm(l, v(i).den());
  PolyVec out(v.size());
  for (Index i = 0; i < v.size(); ++i) {
    if (v(i).is_zero()) continue;
    out[i] = v(i).num() * divmod(l, v(i).den()).first;
  }
  // Divide out the greatest common power of t.
  int content = -1;
  for (const auto& p : out)
    if (!p.is_zero()) {
      const int tr = p.trailing_degree();
      content = content < 0 ? tr : std::min(content, tr);
    }
  if (content > 0)
    for (auto& p : out)
      if (!p.is_zero()) p = p.shifted_down(content);
  return out;
}

VectorQ eval_at_zero(const PolyVec& v) {
  VectorQ out = VectorQ::Zero(static_cast<Index>(v.size()));
  for (size_t i = 0; i < v.size(); ++i) out(static_cast<Index>(i)) = v[i].coeff(0);
  return out;
}

// Flat limit of the row span at t = 0: while the specialized rows are
// dependent, replace the highest-index row participating in a dependency by
// the dependency combination divided by its t-content. Row operations are
// invertible over Q(t), so the Q(t)-row space never changes, and the
// Q[t]-module of rows strictly grows until the specialization has full rank.
std::vector<VectorQ> flat_limit_rows(std::vector<PolyVec> rows) {
  const int max_steps = 1000;
  for (int step = 0; step < max_steps; ++step) {
    std::vector<VectorQ> specialized;
    specialized.reserve(rows.size());
    for (const auto& r : rows) specialized.push_back(eval_at_zero(r));
    const MatrixQ m = matrix_from_rows(specialized);
    const auto rr = rref_rank_kernel(m.transpose());
    if (rr.rank == static_cast<Index>(rows.size())) return specialized;

    const VectorQ& dep = rr.kernel.front();  // dependency among the rows
    Index last = -1;
    for (Index i = 0; i < dep.size(); ++i)
      if (!dep(i).is_zero()) last = i;
    PolyVec combo(rows.front().size());
    for (Index i = 0; i < dep.size(); ++i) {
      if (dep(i).is_zero()) continue;
      for (size_t j = 0; j < combo.size(); ++j) combo[j] += dep(i) * rows[i][j];
    }
    int content = -1;
    for (const auto& p : combo)
      if (!p.is_zero()) {
        const int tr = p.trailing_degree();
        content = content < 0 ? tr : std::min(content, tr);
      }
    if (content < 1) throw std::logic_error("flat limit: dependency combination is not divisible by t");
    for (auto& p : combo)
      if (!p.is_zero()) p = p.shifted_down(content);
    rows[last] = std::move(combo);
  }
  throw std::logic_error("flat limit saturation did not terminate");
}

}  // namespace

FlatLimitReport flat_limit_identities(int k) {
  FlatLimitReport report;
  const int g = 2 * k + 1;
  const auto psi = psi_sections(k);

  // Exact identity families. Both sides have matching second components, so
  // each check is an equality in Q[w, t].
  report.identities_hold = true;
  for (int i = 0; i <= 2 * k - 2; ++i) {
    MultiPoly diff(2);
    if (i <= k - 1)
      diff = psi[k + i + 1].first * psi[0].first - psi[k + i].first * psi[1].first;
    else
      diff = psi[2 * k].first * psi[i - k + 1].first - psi[2 * k - 1].first * psi[i - k + 2].first;
    if (!(diff == MultiPoly::monomial(2, {i, 1}))) {
      report.identities_hold = false;
      report.failing_indices.push_back(i);
    }
  }

  // Quadric relations of the psi products over Q(t). Rows: w^0..w^{4k} on
  // the first branch, then y^0..y^{-4k} on the second.
  const MonomialFrame frame = MonomialFrame::for_coords(g);
  const Index wrows = 4 * k + 1;
  MatrixQt m(2 * wrows, frame.size());
  for (Index r = 0; r < m.rows(); ++r)
    for (Index c = 0; c < m.cols(); ++c) m(r, c) = RatFuncQ();
  Index col = 0;
  for (const auto& [i, j] : frame.monomials) {
    const MultiPoly first = psi[i].first * psi[j].first;
    for (const auto& [e, cf] : first.terms()) {
      PolyQ tpart = PolyQ::monomial(e[1], cf);
      m(e[0], col) = m(e[0], col) + RatFuncQ(tpart);
    }
    m(wrows + i + j, col) = RatFuncQ(Rational(1));
    ++col;
  }
  const auto family = field_rref_rank_kernel(QtField{}, m);
  report.family_kernel_dim = static_cast<Index>(family.kernel.size());

  std::vector<PolyVec> cleared;
  cleared.reserve(family.kernel.size());
  for (const auto& v : family.kernel) cleared.push_back(clear_denominators(v));
  const std::vector<VectorQ> limit = flat_limit_rows(std::move(cleared));

  const auto ribbon_kernel = kernel_of(ribbon_hilbert_point(k).eval);
  report.ribbon_kernel_dim = static_cast<Index>(ribbon_kernel.size());
  report.limit_spans_ribbon_kernel =
      report.family_kernel_dim == report.ribbon_kernel_dim &&
      report.ribbon_kernel_dim == binom2(g - 2) && same_span(limit, ribbon_kernel);
  return report;
}

}  // namespace hilb2
