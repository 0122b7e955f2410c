#ifndef HILB2_MULTIPOLY_HPP
#define HILB2_MULTIPOLY_HPP

#include <map>
#include <span>
#include <string>
#include <vector>

#include "hilb2/poly.hpp"
#include "hilb2/rational.hpp"

namespace hilb2 {

// Variable names live outside the polynomial; exponent vectors are raw.
struct VarContext {
  std::vector<std::string> names;
};

// Exact multivariate polynomial with a fixed number of variables. Terms map
// exponent vectors to nonzero rational coefficients.
class MultiPoly {
 public:
  using Exponents = std::vector<int>;

  explicit MultiPoly(int arity) : arity_(arity) {}

  static MultiPoly constant(int arity, Rational c);
  static MultiPoly variable(int arity, int index);
  static MultiPoly monomial(int arity, Exponents e, Rational c = Rational(1));

  int arity() const { return arity_; }
  bool is_zero() const { return terms_.empty(); }
  Index term_count() const { return static_cast<Index>(terms_.size()); }
  const std::map<Exponents, Rational>& terms() const { return terms_; }

  Rational coeff(const Exponents& e) const;
  void add_term(const Exponents& e, const Rational& c);

  int total_degree() const;
  int degree_in(int var) const;

  MultiPoly operator-() const;
  friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(const Rational& s, const MultiPoly& a);
  MultiPoly& operator+=(const MultiPoly& o) { return *this = *this + o; }
  MultiPoly& operator-=(const MultiPoly& o) { return *this = *this - o; }
  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    return a.arity_ == b.arity_ && a.terms_ == b.terms_;
  }

  MultiPoly pow(int e) const;

  // Substitute a polynomial for every variable.
  MultiPoly compose(std::span<const MultiPoly> values) const;

  Rational eval(std::span<const Rational> point) const;

  // Substitute truncated series for the variables (used for vanishing orders
  // along parameterized branches).
  template <class S>
  Series<S> eval_series(std::span<const Series<S>> point) const {
    if (static_cast<int>(point.size()) != arity_) throw std::invalid_argument("eval_series arity");
    const int n = point.empty() ? 1 : point[0].order();
    Series<S> acc(n);
    for (const auto& [e, c] : terms_) {
      Series<S> term = Series<S>::constant(n, S(c));
      for (int v = 0; v < arity_; ++v)
        for (int k = 0; k < e[v]; ++k) term = term * point[v];
      acc = acc + term;
    }
    return acc;
  }

  // Collect the coefficient of var^k as a polynomial in the other variables
  // (arity preserved; the extracted variable's exponent is zeroed).
  MultiPoly coeff_of(int var, int k) const;

  MultiPoly derivative(int var) const;

  // Exact division by var^k; throws when some term has a smaller exponent.
  MultiPoly divided_by_power(int var, int k) const;

  // View a bivariate polynomial as univariate in `outer` with univariate
  // polynomial coefficients in the other variable.
  Poly1<PolyQ> as_nested(int outer) const;

  std::string str(const VarContext& ctx) const;

 private:
  int arity_;
  std::map<Exponents, Rational> terms_;
};

}  // namespace hilb2

#endif
