#include "hilb2/verify.hpp"

#include <algorithm>
#include <stdexcept>

#include "hilb2/bielliptic.hpp"
#include "hilb2/crimp.hpp"
#include "hilb2/hilbert.hpp"
#include "hilb2/scroll.hpp"
#include "hilb2/slope.hpp"
#include "hilb2/surfquad.hpp"

namespace hilb2 {

namespace {

Json rational_json(const Rational& q) { return to_string(q); }

// Independent route for the extremal basis weights: enumerate every
// column subset of basis size and keep the extrema over the independent
// ones. Only viable for small frames (g = 4, 5).
WeightRange exhaustive_min_max_basis_weight(const HilbertPoint2& h, const OnePS& rho) {
  const Index n = h.frame.size();
  const Index r = h.rank;
  std::vector<Index> subset(r);
  WeightRange range{0, 0};
  bool seen = false;

  std::function<void(Index, Index)> recurse = [&](Index start, Index chosen) {
    if (chosen == r) {
      std::vector<VectorQ> cols;
      for (Index c : subset) cols.push_back(h.eval.col(c));
      if (span_dim(cols) != r) return;
      long w = 0;
      for (Index c : subset) w += rho.monomial_weight(h.frame.monomials[c]);
      if (!seen) {
        range = {w, w};
        seen = true;
      } else {
        range.min_weight = std::min(range.min_weight, w);
        range.max_weight = std::max(range.max_weight, w);
      }
      return;
    }
    for (Index c = start; c <= n - (r - chosen); ++c) {
      subset[chosen] = c;
      recurse(c + 1, chosen + 1);
    }
  };
  recurse(0, 0);
  if (!seen) throw std::domain_error("no column basis found");
  return range;
}

std::vector<Rational> random_crimping(Rng& rng, int g) {
  std::vector<Rational> a;
  a.push_back(Rational(rng.nonzero(-5, 5)));
  for (int i = 1; i < g; ++i) a.push_back(Rational(rng.uniform(-5, 5)));
  return a;
}

// --- individual checks ----------------------------------------------------

CheckResult check_scroll_weight_law(std::uint64_t) {
  CheckResult res;
  int pairs = 0;
  for (int a = 1; a <= 10; ++a)
    for (int b = 1; b <= a; ++b) {
      const ScrollParams p(a, b);
      const long closed = scroll_weight(p);
      if (closed != scroll_weight_expanded(p)) {
        res.details["witness"] = {{"a", a}, {"b", b}, {"reason", "closed form disagrees"}};
        return res;
      }
      const HilbertPoint2 h = scroll_hilbert_point(p);
      const WeightRange w = min_max_basis_weight(h, scroll_rho(p));
      const TorusVerdict v = torus_verdict(h, scroll_rho(p));
      const bool expected_destab = a != b;
      if (w.min_weight != closed || w.max_weight != closed ||
          (v == TorusVerdict::kDestabilizedBy) != expected_destab) {
        res.details["witness"] = {{"a", a},
                                  {"b", b},
                                  {"closed_form", closed},
                                  {"greedy_min", w.min_weight},
                                  {"greedy_max", w.max_weight},
                                  {"verdict", to_string(v)}};
        return res;
      }
      ++pairs;
    }
  res.pass = true;
  res.details["pairs_checked"] = pairs;
  return res;
}

CheckResult check_scroll_kernel_minors(std::uint64_t) {
  CheckResult res;
  int pairs = 0;
  for (int a = 1; a <= 9; ++a)
    for (int b = 1; b <= a && a + b <= 10; ++b) {
      const ScrollParams p(a, b);
      const HilbertPoint2 h = scroll_hilbert_point(p);
      const QuadricSpace kernel = kernel_quadrics(h);
      const QuadricSpace minors = scroll_minor_ideal(p);
      const Index expected = binom2(p.genus() - 2);
      if (kernel.dim() != expected || minors.dim() != expected ||
          !same_span(kernel.basis, minors.basis)) {
        res.details["witness"] = {{"a", a},
                                  {"b", b},
                                  {"kernel_dim", kernel.dim()},
                                  {"minor_dim", minors.dim()},
                                  {"expected", expected}};
        return res;
      }
      ++pairs;
    }
  res.pass = true;
  res.details["pairs_checked"] = pairs;
  return res;
}

CheckResult check_a9_example(std::uint64_t) {
  CheckResult res;
  // The displayed A9 model: kappa and the four section pairs are what the
  // defining recurrence produces for the gluing datum y -> x + x^2. The
  // datum printed next to the display, y -> x + x^2 + x^3 + x^4, fails the
  // recurrence's own defining property and yields kappa = (1-x)^3 instead;
  // see the repository notes on this discrepancy.
  const CrimpingDatum display_datum(4, {Rational(1), Rational(1), Rational(0), Rational(0)});
  const TruncSeries kappa = kappa_from_crimping(display_datum).kappa;
  TruncSeries expected(5, {Rational(1), Rational(-3), Rational(5), Rational(-5), Rational(0)});
  res.details["kappa"] = kappa.to_poly().str("x");
  if (!(kappa == expected)) return res;
  if (!kappa_defining_property_holds(display_datum, kappa)) return res;

  // The displayed quadruple, as unordered pair content.
  const auto sections = canonical_sections(display_datum);
  const std::vector<std::pair<PolyQ, PolyQ>> shown = {
      {PolyQ(std::vector<Rational>{1}), PolyQ(std::vector<Rational>{1, -3, 5, -5})},
      {PolyQ::monomial(1), PolyQ(std::vector<Rational>{0, 1, -2, 2})},
      {PolyQ::monomial(2), PolyQ(std::vector<Rational>{0, 0, 1, -1})},
      {PolyQ::monomial(3), PolyQ(std::vector<Rational>{0, 0, 0, 1})}};
  for (int i = 0; i < 4; ++i) {
    const bool match = (sections[i].on_y == shown[i].first && sections[i].on_x == shown[i].second) ||
                       (sections[i].on_y == shown[i].second && sections[i].on_x == shown[i].first);
    if (!match) {
      res.details["witness"] = {{"section", i}};
      return res;
    }
  }

  // The other datum satisfies the defining property with kappa = (1-x)^3.
  const CrimpingDatum printed_datum(4, {Rational(1), Rational(1), Rational(1), Rational(1)});
  const TruncSeries other = kappa_from_crimping(printed_datum).kappa;
  TruncSeries cube(5, {Rational(1), Rational(-3), Rational(3), Rational(-1), Rational(0)});
  if (!(other == cube) || !kappa_defining_property_holds(printed_datum, other)) return res;
  res.details["crimping_1111_kappa"] = other.to_poly().str("x");

  res.pass = true;
  return res;
}

CheckResult check_kappa_family(std::uint64_t) {
  CheckResult res;
  for (int k = 2; k <= 6; ++k) {
    const int g = 2 * k + 1;
    // Crimping y -> x - t x^{k+2}, with t carried symbolically.
    std::vector<RatFuncQ> a(g, RatFuncQ());
    a[0] = RatFuncQ(Rational(1));
    a[k + 1] = RatFuncQ(PolyQ::monomial(1, Rational(-1)));
    const auto kappa = kappa_from_crimping_coeffs<RatFuncQ>(g, a);

    Series<RatFuncQ> expected(g + 1);
    expected.coeff(0) = RatFuncQ(Rational(1));
    expected.coeff(k + 1) = RatFuncQ(PolyQ::monomial(1, Rational(k)));
    if (!(kappa == expected)) {
      res.details["witness"] = {{"k", k}};
      return res;
    }
  }
  res.pass = true;
  res.details["k_range"] = "2..6";
  return res;
}

CheckResult check_k1_closed_form(std::uint64_t seed) {
  CheckResult res;
  Rng rng(seed);
  int trials = 0;
  for (int g = 4; g <= 10; ++g)
    for (int t = 0; t < 50; ++t) {
      const CrimpingDatum c(g, random_crimping(rng, g));
      const TruncSeries kappa = kappa_from_crimping(c).kappa;
      if (kappa.coeff(1) != kappa_k1_closed_form(c) || !kappa_defining_property_holds(c, kappa)) {
        res.details["witness"] = {{"g", g}, {"trial", t}};
        return res;
      }
      ++trials;
    }
  res.pass = true;
  res.details["trials"] = trials;
  return res;
}

CheckResult check_crimped_hilbert_points(std::uint64_t seed) {
  CheckResult res;
  Rng rng(seed);
  int built = 0;
  for (int g = 4; g <= 8; ++g)
    for (int t = 0; t < 3; ++t) {
      const CrimpingDatum c(g, random_crimping(rng, g));
      const auto sections = canonical_sections(c);
      const HilbertPoint2 h = crimped_hilbert_point(c);
      if (static_cast<int>(sections.size()) != g || h.rank != 3 * g - 3 ||
          h.kernel_dim() != binom2(g - 2)) {
        std::vector<std::string> coeffs;
        for (const auto& v : c.a) coeffs.push_back(to_string(v));
        res.details["witness"] = {{"g", g},
                                  {"crimping", coeffs},
                                  {"rank", h.rank},
                                  {"expected_rank", 3 * g - 3},
                                  {"kernel_dim", h.kernel_dim()}};
        return res;
      }
      ++built;
    }
  res.pass = true;
  res.details["instances"] = built;
  return res;
}

CheckResult check_ribbon_flat_limit(std::uint64_t) {
  CheckResult res;
  for (int k = 2; k <= 5; ++k) {
    const FlatLimitReport r = flat_limit_identities(k);
    if (!r.ok()) {
      res.details["witness"] = {{"k", k},
                                {"identities_hold", r.identities_hold},
                                {"family_kernel_dim", r.family_kernel_dim},
                                {"ribbon_kernel_dim", r.ribbon_kernel_dim},
                                {"spans_match", r.limit_spans_ribbon_kernel}};
      return res;
    }
  }
  res.pass = true;
  res.details["k_range"] = "2..5";
  return res;
}

CheckResult check_osculating(std::uint64_t seed) {
  CheckResult res;
  Rng rng(seed);
  const MultiPoly x = MultiPoly::variable(2, 0);
  const MultiPoly y = MultiPoly::variable(2, 1);
  const BidegreeCurve c1(2, 1, y - x * x);
  for (int k = 2; k <= 6; ++k) {
    int successes = 0;
    for (int t = 0; t < 24 && successes < 20; ++t) {
      const Rational c(rng.nonzero(-40, 40));
      try {
        osculating_member(k, c1, {c, c * c});
        ++successes;
      } catch (const std::exception&) {
        // re-drawn below; uniqueness failures count against the quota
      }
    }
    if (successes < 20) {
      res.details["witness"] = {{"k", k}, {"successes", successes}};
      return res;
    }
  }
  res.pass = true;
  res.details["points_per_k"] = 20;
  return res;
}

CheckResult check_param_e(std::uint64_t) {
  CheckResult res;
  for (int m = 1; m <= 3; ++m) {
    const ParamEReport r = verify_param_e(m);
    if (!r.ok(m)) {
      res.details["witness"] = {{"m", m},
                                {"identity", r.identity_holds},
                                {"order", r.vanishing_order},
                                {"expected_order", 6 * m + 1}};
      return res;
    }
  }
  res.pass = true;
  res.details["m_range"] = "1..3";
  return res;
}

CheckResult check_trigonal_coincidence(std::uint64_t seed) {
  CheckResult res;
  for (int k = 2; k <= 5; ++k) {
    const KernelMatchReport r = curve_vs_scroll_kernel(k, seed + k);
    if (!r.ok(k)) {
      res.details["witness"] = {{"k", k},
                                {"surface_matches", r.surface_matches_minors},
                                {"curve_matches", r.curve_matches_minors},
                                {"curve_rank", r.curve_rank},
                                {"expected_rank", 6 * k - 3}};
      return res;
    }
  }
  res.pass = true;
  res.details["k_range"] = "2..5";
  return res;
}

CheckResult check_elliptic_quadric_counts(std::uint64_t) {
  CheckResult res;
  const WeierstrassCurve E(Rational(0), Rational(1));  // y^2 = x^3 + 1
  for (int n = 5; n <= 9; ++n) {
    const HilbertPoint2 h = elliptic_hilbert_point(E, n);
    const Index expected = binom2(n + 1) - 2 * n;
    if (h.rank != 2 * n || h.kernel_dim() != expected) {
      res.details["witness"] = {{"n", n},
                                {"rank", h.rank},
                                {"kernel_dim", h.kernel_dim()},
                                {"expected_kernel_dim", expected}};
      return res;
    }
  }
  const ConeAssembly cone = cone_quadric_assembly(E);
  if (cone.count != 5 || !cone.all_vertex_singular || !cone.all_weights_minus_two ||
      cone.expected_curve_kernel_dim != 6) {
    res.details["witness"] = {{"cone_count", cone.count},
                              {"vertex_singular", cone.all_vertex_singular},
                              {"weights_minus_two", cone.all_weights_minus_two}};
    return res;
  }
  res.pass = true;
  res.details["n_range"] = "5..9";
  return res;
}

CheckResult check_bielliptic_bound_table(std::uint64_t) {
  CheckResult res;
  for (int g = 6; g <= 20; ++g) {
    const ConeWeightBound b = cone_weight_bound(g);
    const BiellipticConflict c = bielliptic_conflict_check(g);
    const bool zero_exactly_at_six = (b.bound == 0) == (g == 6);
    if (b.bound != -long(g - 1) * (g - 6) || !zero_exactly_at_six || !c.agree() ||
        c.slope_exceeds_bound != (b.bound < 0)) {
      res.details["witness"] = {{"g", g}, {"bound", b.bound}};
      return res;
    }
  }
  res.pass = true;
  res.details["g_range"] = "6..20";
  return res;
}

CheckResult check_slope_arithmetic(std::uint64_t seed) {
  CheckResult res;
  const FamilyInvariants f8 = bielliptic_family(8);
  if (f8.lambda != 1 || f8.delta != 8 || f8.kappa != 4 || f8.slope() != 8) return res;
  const FamilyInvariants f16 = bielliptic_family(16);
  if (f16.lambda != 2 || f16.delta != 16 || f16.slope() != 8) return res;

  Rng rng(seed);
  for (int t = 0; t < 100; ++t) {
    const FamilyInvariants inv = FamilyInvariants::from_lambda_delta(
        Rational(rng.uniform(1, 40), rng.uniform(1, 8)), Rational(rng.uniform(-20, 300), 1));
    const int g = static_cast<int>(rng.uniform(2, 30));
    if (!verify_ch(inv, g).consistent()) {
      res.details["witness"] = {{"trial", t}, {"g", g}};
      return res;
    }
  }

  const auto expect = [&](int g, const char* classic, const char* ours, const char* sweep,
                          const char* maroni) {
    const ReferenceSlopes r = reference_slopes(g);
    return r.ch_classic == Rational(classic) && r.this_bound == Rational(ours) &&
           r.trigonal_sweep == Rational(sweep) && r.trigonal_maroni == Rational(maroni);
  };
  if (!expect(6, "26/3", "8", "153/19", "252/31") || !expect(7, "60/7", "55/7", "87/11", "8") ||
      !expect(11, "92/11", "83/11", "129/17", "54/7")) {
    res.details["witness"] = "reference slope table mismatch";
    return res;
  }
  res.pass = true;
  res.details["random_triples"] = 100;
  return res;
}

CheckResult check_rank_detection(std::uint64_t seed) {
  CheckResult res;
  // quadric_rank on x0 x2 - x1^2 in the genus-4 frame.
  const MonomialFrame frame4 = MonomialFrame::for_coords(4);
  VectorQ q = VectorQ::Zero(frame4.size());
  q(frame4.index_of(0, 2)) = 1;
  q(frame4.index_of(1, 1)) = -1;
  if (quadric_rank(q, frame4) != 3) {
    res.details["witness"] = "rank of x0 x2 - x1^2";
    return res;
  }

  // BasisScan finds a rank <= 3 element in every unbalanced-enough kernel.
  for (int a = 1; a <= 9; ++a)
    for (int b = 1; b <= a && a + b <= 10; ++b) {
      if (a < 2 && b < 2) continue;
      const auto hit = rank_le3_basis_scan(kernel_quadrics(scroll_hilbert_point(ScrollParams(a, b))));
      if (!hit || !hit->verified_over_q) {
        res.details["witness"] = {{"a", a}, {"b", b}};
        return res;
      }
    }

  // Greedy extremal weights agree with exhaustive basis enumeration on
  // genus 4 and 5 instances.
  Rng rng(seed);
  std::vector<std::pair<HilbertPoint2, OnePS>> instances;
  Eigen::VectorXi r4(4);
  r4 << 3, 1, -1, -3;
  instances.emplace_back(scroll_hilbert_point(ScrollParams(1, 1)), scroll_rho(ScrollParams(1, 1)));
  instances.emplace_back(scroll_hilbert_point(ScrollParams(2, 1)), scroll_rho(ScrollParams(2, 1)));
  instances.emplace_back(
      crimped_hilbert_point(CrimpingDatum(4, {Rational(1), Rational(1), Rational(1), Rational(1)})),
      OnePS(r4));
  Eigen::VectorXi r5(5);
  r5 << 2, 1, 0, -1, -2;
  instances.emplace_back(crimped_hilbert_point(CrimpingDatum(5, random_crimping(rng, 5))), OnePS(r5));
  for (size_t i = 0; i < instances.size(); ++i) {
    const auto& [h, rho] = instances[i];
    const WeightRange greedy = min_max_basis_weight(h, rho);
    const WeightRange brute = exhaustive_min_max_basis_weight(h, rho);
    if (greedy.min_weight != brute.min_weight || greedy.max_weight != brute.max_weight) {
      res.details["witness"] = {{"instance", i},
                                {"greedy", {greedy.min_weight, greedy.max_weight}},
                                {"exhaustive", {brute.min_weight, brute.max_weight}}};
      return res;
    }
  }
  res.pass = true;
  return res;
}

}  // namespace

const std::vector<Check>& acceptance_checks() {
  static const std::vector<Check> checks = [] {
    std::vector<Check> list = {
        {"scroll.weight-law", "scroll",
         "for all 1 <= b <= a <= 10 every monomial basis of H0(S_ab, O(2)) has torus weight "
         "(a-b)(a+b-1), so S_ab is torus-destabilized exactly when a != b",
         check_scroll_weight_law},
        {"scroll.kernel-minors", "scroll",
         "for a+b <= 10 the quadrics vanishing on S_ab are spanned by the 2x2 minors of the "
         "scroll matrix, a space of dimension C(g-2,2)",
         check_scroll_kernel_minors},
        {"crimp.a9-example", "crimp",
         "the canonical A9 model has gluing unit 1 - 3x + 5x^2 - 5x^3 and the displayed four "
         "section pairs (gluing datum y -> x + x^2); the datum (1,1,1,1) satisfies the defining "
         "recurrence with kappa = (1-x)^3 instead",
         check_a9_example},
        {"crimp.kappa-family", "crimp",
         "the crimping y -> x - t x^{k+2} on genus 2k+1 has gluing unit 1 + t k x^{k+1}, "
         "symbolically in t, for 2 <= k <= 6",
         check_kappa_family},
        {"crimp.k1-closed-form", "crimp",
         "k_1 = -(g-1) a_2 / a_1 and the defining property holds on 50 random crimpings per "
         "genus, 4 <= g <= 10",
         check_k1_closed_form},
        {"crimp.hilbert-points", "crimp",
         "random crimped curves of genus 4..8 give g sections, product rank 3g-3, and kernel "
         "dimension (g-2)(g-3)/2",
         check_crimped_hilbert_points},
        {"ribbon.flat-limit", "ribbon",
         "psi_{k+i+1} psi_0 - psi_{k+i} psi_1 = (w^i t, 0) and psi_{2k} psi_{i-k+1} - "
         "psi_{2k-1} psi_{i-k+2} = (w^i t, 0) hold exactly, and the t -> 0 limit of the "
         "relation space equals the balanced ribbon's relation space, 2 <= k <= 5",
         check_ribbon_flat_limit},
        {"surfquad.osculating", "surfquad",
         "at 20 random non-ramification points of a (2,1) curve there is a unique (1,k) member "
         "with contact exactly 2k+1, certified by a one-dimensional contact system, 2 <= k <= 6",
         check_osculating},
        {"surfquad.param-e", "surfquad",
         "x = t^3, y = t^{3m}/(1 - t^{3m+1}) parameterizes (y - x^m)^3 - x^{3m+1} y^3 = 0 to "
         "order 12m+10 with ord(y - x^m) = 6m+1, for m = 1, 2, 3",
         check_param_e},
        {"surfquad.trigonal-coincidence", "surfquad",
         "the bidegree (2, 2k-2) kernel of P1xP1 embedded by |O(1,k-1)|, the balanced scroll "
         "minors, and the kernel of the singular A-curve's canonical embedding all coincide, "
         "2 <= k <= 5",
         check_trigonal_coincidence},
        {"bielliptic.quadric-counts", "bielliptic",
         "an elliptic normal curve of degree n has C(n+1,2) - 2n quadrics through it "
         "(5 <= n <= 9, y^2 = x^3 + 1); at n = 5 the five quadrics lift to vertex-singular "
         "quadrics on P^5 with every monomial of torus weight -2",
         check_elliptic_quadric_counts},
        {"bielliptic.bound-table", "bielliptic",
         "the cone weight bound equals -(g-1)(g-6) for 6 <= g <= 20, vanishes exactly at g = 6, "
         "and its sign matches the slope-8 conflict with the bound 7 + 6/g",
         check_bielliptic_bound_table},
        {"slope.arithmetic", "slope",
         "the bielliptic family has lambda = D^2/8 and slope exactly 8; both forms of the slope "
         "inequality agree on 100 random triples; the reference slope table is exact at "
         "g = 6, 7, 11",
         check_slope_arithmetic},
        {"scroll.rank-detection", "scroll",
         "x0 x2 - x1^2 has Gram rank 3; a rank-3 quadric appears in every scroll kernel with "
         "a >= 2 or b >= 2; greedy extremal weights match exhaustive basis enumeration on "
         "genus 4 and 5 instances",
         check_rank_detection},
    };
    for (const auto& c : list)
      if (c.claim.empty()) throw std::logic_error("check registered without a claim: " + c.id);
    return list;
  }();
  return checks;
}

Json run_suite(const std::string& suite, std::uint64_t seed) {
  Json report;
  report["suite"] = suite;
  report["seed"] = seed;
  Json checks = Json::array();
  int passed = 0, failed = 0;
  for (const auto& check : acceptance_checks()) {
    if (suite != "all" && check.suite != suite) continue;
    Json entry;
    entry["id"] = check.id;
    entry["suite"] = check.suite;
    entry["claim"] = check.claim;
    CheckResult r;
    try {
      r = check.run(seed ^ fnv1a(check.id));
    } catch (const std::exception& e) {
      r.pass = false;
      r.details["exception"] = e.what();
    }
    entry["pass"] = r.pass;
    entry["details"] = r.details;
    (r.pass ? passed : failed) += 1;
    checks.push_back(std::move(entry));
  }
  if (checks.empty()) throw std::invalid_argument("unknown suite: " + suite);
  report["checks"] = std::move(checks);
  report["passed"] = passed;
  report["failed"] = failed;
  return report;
}

bool suite_passed(const Json& report) { return report.at("failed").get<int>() == 0; }

}  // namespace hilb2
