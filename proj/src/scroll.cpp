#include "hilb2/scroll.hpp"

#include <map>
#include <stdexcept>

namespace hilb2 {

ScrollParams::ScrollParams(int a_, int b_) : a(a_), b(b_) {
  if (a < 1 || b < 1) throw std::invalid_argument("scroll parameters require a >= 1 and b >= 1");
}

ScrollChart scroll_sections(const ScrollParams& p) {
  ScrollChart chart{p, {}};
  const MultiPoly u = MultiPoly::variable(2, 0);
  const MultiPoly w = MultiPoly::variable(2, 1);
  for (int i = 0; i <= p.a; ++i) chart.sections.push_back(u.pow(i));
  for (int j = 0; j <= p.b; ++j) chart.sections.push_back(w * u.pow(j));
  return chart;
}

QuadricSpace scroll_minor_ideal(const ScrollParams& p) {
  const int g = p.genus();
  const MonomialFrame frame = MonomialFrame::for_coords(g);
  // Column c of the scroll matrix is (v_top(c), v_bot(c)) in coordinate
  // indices: x_i lives at index i, y_j at index a + 1 + j.
  std::vector<std::pair<int, int>> cols;
  for (int i = 0; i < p.a; ++i) cols.emplace_back(i, i + 1);
  for (int j = 0; j < p.b; ++j) cols.emplace_back(p.a + 1 + j, p.a + 2 + j);

  QuadricSpace space{frame, {}};
  for (size_t c1 = 0; c1 < cols.size(); ++c1)
    for (size_t c2 = c1 + 1; c2 < cols.size(); ++c2) {
      VectorQ q = VectorQ::Zero(frame.size());
      q(frame.index_of(cols[c1].first, cols[c2].second)) += 1;
      q(frame.index_of(cols[c1].second, cols[c2].first)) -= 1;
      space.basis.push_back(std::move(q));
    }
  return space;
}

OnePS scroll_rho(const ScrollParams& p) {
  Eigen::VectorXi w(p.genus());
  for (int i = 0; i <= p.a; ++i) w(i) = -(p.b + 1);
  for (int j = 0; j <= p.b; ++j) w(p.a + 1 + j) = p.a + 1;
  return OnePS(std::move(w));
}

long scroll_weight(const ScrollParams& p) { return long(p.a - p.b) * (p.a + p.b - 1); }

long scroll_weight_expanded(const ScrollParams& p) {
  const long a = p.a, b = p.b;
  return 2 * (b + 1) * (a * (a - 1) / 2) - 2 * (a + 1) * (b * (b - 1) / 2) - a * b * (a - b);
}

ScrollParams maroni_scroll(int g, int m) {
  if (m < 0 || (g - m) % 2 != 0)
    throw std::invalid_argument("Maroni invariant must be non-negative with the parity of g");
  const int a = (g + m) / 2 - 1;
  const int b = (g - m) / 2 - 1;
  if (b < 1) throw std::invalid_argument("degenerate scroll: Maroni invariant too large for this genus");
  return ScrollParams(a, b);
}

std::vector<MultiPoly> veronese_sections() {
  std::vector<MultiPoly> s;
  for (int i = 0; i < 3; ++i)
    for (int j = i; j < 3; ++j) {
      std::vector<int> e(3, 0);
      e[i] += 1;
      e[j] += 1;
      s.push_back(MultiPoly::monomial(3, e));
    }
  return s;
}

HilbertPoint2 hilbert_point_from_polys(const std::vector<MultiPoly>& sections) {
  const int g = static_cast<int>(sections.size());
  std::vector<MultiPoly> products;
  std::map<MultiPoly::Exponents, Index> basis;  // monomial -> row
  for (int i = 0; i < g; ++i)
    for (int j = i; j < g; ++j) {
      products.push_back(sections[i] * sections[j]);
      for (const auto& [e, c] : products.back().terms()) basis.emplace(e, 0);
    }
  Index row = 0;
  for (auto& [e, r] : basis) r = row++;

  Index col = 0;
  MatrixQ eval = MatrixQ::Zero(row, static_cast<Index>(products.size()));
  for (const auto& prod : products) {
    for (const auto& [e, c] : prod.terms()) eval(basis.at(e), col) = c;
    ++col;
  }
  HilbertPoint2 h{MonomialFrame::for_coords(g), std::move(eval)};
  h.rank = rank_of(h.eval);
  return h;
}

HilbertPoint2 scroll_hilbert_point(const ScrollParams& p) {
  return hilbert_point_from_polys(scroll_sections(p).sections);
}

HilbertPoint2 veronese_hilbert_point() { return hilbert_point_from_polys(veronese_sections()); }

}  // namespace hilb2
