#include "hilb2/multipoly.hpp"

#include <sstream>
#include <stdexcept>

namespace hilb2 {

MultiPoly MultiPoly::constant(int arity, Rational c) {
  MultiPoly p(arity);
  p.add_term(Exponents(arity, 0), c);
  return p;
}

MultiPoly MultiPoly::variable(int arity, int index) {
  Exponents e(arity, 0);
  e.at(index) = 1;
  return monomial(arity, std::move(e));
}

MultiPoly MultiPoly::monomial(int arity, Exponents e, Rational c) {
  if (static_cast<int>(e.size()) != arity) throw std::invalid_argument("exponent arity mismatch");
  MultiPoly p(arity);
  p.add_term(e, c);
  return p;
}

Rational MultiPoly::coeff(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

void MultiPoly::add_term(const Exponents& e, const Rational& c) {
  if (static_cast<int>(e.size()) != arity_) throw std::invalid_argument("exponent arity mismatch");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

int MultiPoly::total_degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) {
    int s = 0;
    for (int v : e) s += v;
    d = std::max(d, s);
  }
  return d;
}

int MultiPoly::degree_in(int var) const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, e.at(var));
  return d;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r(arity_);
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
  return r;
}

MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
  if (a.arity_ != b.arity_) throw std::invalid_argument("arity mismatch");
  MultiPoly r = a;
  for (const auto& [e, c] : b.terms_) r.add_term(e, c);
  return r;
}

MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) { return a + (-b); }

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  if (a.arity_ != b.arity_) throw std::invalid_argument("arity mismatch");
  MultiPoly r(a.arity_);
  MultiPoly::Exponents e(a.arity_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      for (int v = 0; v < a.arity_; ++v) e[v] = ea[v] + eb[v];
      r.add_term(e, ca * cb);
    }
  return r;
}

MultiPoly operator*(const Rational& s, const MultiPoly& a) {
  MultiPoly r(a.arity_);
  if (s.is_zero()) return r;
  for (const auto& [e, c] : a.terms_) r.terms_.emplace(e, s * c);
  return r;
}

MultiPoly MultiPoly::pow(int e) const {
  MultiPoly r = constant(arity_, Rational(1));
  for (int i = 0; i < e; ++i) r = r * *this;
  return r;
}

MultiPoly MultiPoly::compose(std::span<const MultiPoly> values) const {
  if (static_cast<int>(values.size()) != arity_) throw std::invalid_argument("compose arity");
  const int out_arity = values.empty() ? arity_ : values[0].arity();
  MultiPoly acc(out_arity);
  for (const auto& [e, c] : terms_) {
    MultiPoly term = constant(out_arity, c);
    for (int v = 0; v < arity_; ++v)
      for (int k = 0; k < e[v]; ++k) term = term * values[v];
    acc += term;
  }
  return acc;
}

Rational MultiPoly::eval(std::span<const Rational> point) const {
  if (static_cast<int>(point.size()) != arity_) throw std::invalid_argument("eval arity");
  Rational acc(0);
  for (const auto& [e, c] : terms_) {
    Rational term = c;
    for (int v = 0; v < arity_; ++v)
      for (int k = 0; k < e[v]; ++k) term *= point[v];
    acc += term;
  }
  return acc;
}

MultiPoly MultiPoly::coeff_of(int var, int k) const {
  MultiPoly r(arity_);
  for (const auto& [e, c] : terms_) {
    if (e.at(var) != k) continue;
    Exponents e2 = e;
    e2[var] = 0;
    r.add_term(e2, c);
  }
  return r;
}

MultiPoly MultiPoly::derivative(int var) const {
  MultiPoly r(arity_);
  for (const auto& [e, c] : terms_) {
    if (e.at(var) == 0) continue;
    Exponents e2 = e;
    e2[var] -= 1;
    r.add_term(e2, c * e[var]);
  }
  return r;
}

MultiPoly MultiPoly::divided_by_power(int var, int k) const {
  MultiPoly r(arity_);
  for (const auto& [e, c] : terms_) {
    if (e.at(var) < k) throw std::domain_error("divided_by_power: term not divisible");
    Exponents e2 = e;
    e2[var] -= k;
    r.add_term(e2, c);
  }
  return r;
}

Poly1<PolyQ> MultiPoly::as_nested(int outer) const {
  if (arity_ != 2) throw std::invalid_argument("as_nested expects two variables");
  const int inner = 1 - outer;
  std::vector<PolyQ> coeffs(degree_in(outer) + 1);
  for (const auto& [e, c] : terms_)
    coeffs.at(e[outer]) = coeffs.at(e[outer]) + PolyQ::monomial(e[inner], c);
  return Poly1<PolyQ>(std::move(coeffs));
}

std::string MultiPoly::str(const VarContext& ctx) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    bool printed = false;
    if (!(c == Rational(1))) {
      os << c;
      printed = true;
    }
    for (int v = 0; v < arity_; ++v) {
      if (e[v] == 0) continue;
      if (printed) os << "*";
      os << ctx.names.at(v);
      if (e[v] > 1) os << "^" << e[v];
      printed = true;
    }
    if (!printed) os << c;
  }
  return os.str();
}

}  // namespace hilb2
