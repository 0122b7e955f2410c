#ifndef HILB2_POLY_HPP
#define HILB2_POLY_HPP

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "hilb2/rational.hpp"

namespace hilb2 {

// Dense univariate polynomial over an exact scalar. The zero polynomial is
// the empty coefficient list; degree(0) == -1.
template <class S>
class Poly1 {
 public:
  Poly1() = default;
  explicit Poly1(S constant) {
    if (!(constant == S(0))) c_.push_back(std::move(constant));
  }
  explicit Poly1(std::vector<S> coeffs) : c_(std::move(coeffs)) { trim(); }

  static Poly1 monomial(int k, S coeff = S(1)) {
    Poly1 p;
    if (coeff == S(0)) return p;
    p.c_.assign(k + 1, S(0));
    p.c_[k] = std::move(coeff);
    return p;
  }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }

  // Largest k with x^k dividing the polynomial; -1 for the zero polynomial.
  int trailing_degree() const {
    for (int i = 0; i < static_cast<int>(c_.size()); ++i)
      if (!(c_[i] == S(0))) return i;
    return -1;
  }

  S coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(c_.size())) return S(0);
    return c_[k];
  }

  const S& leading() const {
    if (is_zero()) throw std::domain_error("leading coefficient of 0");
    return c_.back();
  }

  S eval(const S& x) const {
    S acc(0);
    for (int i = degree(); i >= 0; --i) acc = acc * x + c_[i];
    return acc;
  }

  Poly1 operator-() const {
    Poly1 r = *this;
    for (auto& v : r.c_) v = -v;
    return r;
  }

  friend Poly1 operator+(const Poly1& a, const Poly1& b) {
    Poly1 r;
    r.c_.resize(std::max(a.c_.size(), b.c_.size()), S(0));
    for (size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = a.coeff(int(i)) + b.coeff(int(i));
    r.trim();
    return r;
  }
  friend Poly1 operator-(const Poly1& a, const Poly1& b) { return a + (-b); }
  friend Poly1 operator*(const Poly1& a, const Poly1& b) {
    if (a.is_zero() || b.is_zero()) return Poly1();
    Poly1 r;
    r.c_.assign(a.c_.size() + b.c_.size() - 1, S(0));
    for (size_t i = 0; i < a.c_.size(); ++i)
      for (size_t j = 0; j < b.c_.size(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
    r.trim();
    return r;
  }
  friend Poly1 operator*(const S& s, const Poly1& a) {
    if (s == S(0)) return Poly1();
    Poly1 r = a;
    for (auto& v : r.c_) v = s * v;
    return r;
  }
  Poly1& operator+=(const Poly1& o) { return *this = *this + o; }
  Poly1& operator-=(const Poly1& o) { return *this = *this - o; }
  Poly1& operator*=(const Poly1& o) { return *this = *this * o; }

  friend bool operator==(const Poly1& a, const Poly1& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Poly1& a, const Poly1& b) { return !(a == b); }

  // Euclidean division; the scalar type must be a field.
  friend std::pair<Poly1, Poly1> divmod(Poly1 a, const Poly1& b) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    Poly1 q;
    if (a.degree() >= b.degree()) q.c_.assign(a.degree() - b.degree() + 1, S(0));
    while (!a.is_zero() && a.degree() >= b.degree()) {
      const int shift = a.degree() - b.degree();
      const S f = a.leading() / b.leading();
      q.c_[shift] = f;
      for (int i = 0; i <= b.degree(); ++i) a.c_[i + shift] -= f * b.c_[i];
      a.trim();
    }
    q.trim();
    return {q, a};
  }

  // Drop all terms of degree >= n.
  Poly1 truncated(int n) const {
    Poly1 r = *this;
    if (static_cast<int>(r.c_.size()) > n) r.c_.resize(std::max(n, 0));
    r.trim();
    return r;
  }

  // Exact division by x^k; requires trailing degree >= k.
  Poly1 shifted_down(int k) const {
    if (is_zero()) return *this;
    if (trailing_degree() < k) throw std::domain_error("shifted_down: not divisible");
    Poly1 r;
    r.c_.assign(c_.begin() + k, c_.end());
    return r;
  }

  std::string str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = 0; i <= degree(); ++i) {
      if (c_[i] == S(0)) continue;
      if (!first) os << " + ";
      os << c_[i];
      if (i > 0) os << "*" << var << (i > 1 ? "^" + std::to_string(i) : "");
      first = false;
    }
    return os.str();
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == S(0)) c_.pop_back();
  }
  std::vector<S> c_;
};

using PolyQ = Poly1<Rational>;

// Monic greatest common divisor (field coefficients).
template <class S>
Poly1<S> poly_gcd(Poly1<S> a, Poly1<S> b) {
  while (!b.is_zero()) {
    auto [q, r] = divmod(a, b);
    a = b;
    b = r;
  }
  if (!a.is_zero()) a = (S(1) / a.leading()) * a;
  return a;
}

template <class S>
Poly1<S> poly_lcm(const Poly1<S>& a, const Poly1<S>& b) {
  if (a.is_zero() || b.is_zero()) return Poly1<S>();
  return divmod(a * b, poly_gcd(a, b)).first;
}

// --- Truncated power series ----------------------------------------------

// Element of S[x]/(x^N): exactly N stored coefficients.
template <class S>
class Series {
 public:
  Series(int order, std::vector<S> coeffs) : n_(order), c_(std::move(coeffs)) {
    if (order <= 0) throw std::invalid_argument("series order must be positive");
    c_.resize(n_, S(0));
  }
  explicit Series(int order) : Series(order, {}) {}

  static Series constant(int order, S v) {
    Series s(order);
    s.c_[0] = std::move(v);
    return s;
  }
  static Series monomial(int order, int k, S coeff = S(1)) {
    Series s(order);
    if (k < order) s.c_[k] = std::move(coeff);
    return s;
  }
  static Series from_poly(int order, const Poly1<S>& p) {
    Series s(order);
    for (int i = 0; i < order; ++i) s.c_[i] = p.coeff(i);
    return s;
  }

  int order() const { return n_; }
  const S& coeff(int k) const { return c_.at(k); }
  S& coeff(int k) { return c_.at(k); }
  bool is_zero() const {
    for (const auto& v : c_)
      if (!(v == S(0))) return false;
    return true;
  }
  // Order of vanishing; n_ when zero to stored precision.
  int valuation() const {
    for (int i = 0; i < n_; ++i)
      if (!(c_[i] == S(0))) return i;
    return n_;
  }

  Poly1<S> to_poly() const { return Poly1<S>(c_); }

  Series operator-() const {
    Series r = *this;
    for (auto& v : r.c_) v = -v;
    return r;
  }
  friend Series operator+(const Series& a, const Series& b) {
    a.check_same(b);
    Series r = a;
    for (int i = 0; i < a.n_; ++i) r.c_[i] += b.c_[i];
    return r;
  }
  friend Series operator-(const Series& a, const Series& b) { return a + (-b); }
  friend Series operator*(const Series& a, const Series& b) {
    a.check_same(b);
    Series r(a.n_);
    for (int i = 0; i < a.n_; ++i) {
      if (a.c_[i] == S(0)) continue;
      for (int j = 0; i + j < a.n_; ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
    }
    return r;
  }
  friend Series operator*(const S& s, const Series& a) {
    Series r = a;
    for (auto& v : r.c_) v = s * v;
    return r;
  }
  friend bool operator==(const Series& a, const Series& b) { return a.n_ == b.n_ && a.c_ == b.c_; }

  Series pow(int e) const {
    Series r = constant(n_, S(1));
    for (int i = 0; i < e; ++i) r = r * *this;
    return r;
  }

 private:
  void check_same(const Series& o) const {
    if (n_ != o.n_) throw std::invalid_argument("series order mismatch");
  }
  int n_;
  std::vector<S> c_;
};

using TruncSeries = Series<Rational>;

// outer(inner); undefined in the truncated ring unless inner(0) == 0.
template <class S>
Series<S> series_compose(const Series<S>& outer, const Series<S>& inner) {
  if (outer.order() != inner.order()) throw std::invalid_argument("series order mismatch");
  if (!(inner.coeff(0) == S(0)))
    throw std::domain_error("series_compose: inner constant term must vanish");
  const int n = outer.order();
  Series<S> acc(n);
  Series<S> pw = Series<S>::constant(n, S(1));
  for (int k = 0; k < n; ++k) {
    acc = acc + outer.coeff(k) * pw;
    pw = pw * inner;
  }
  return acc;
}

// Multiplicative inverse mod x^N; requires a unit (nonzero constant term).
template <class S>
Series<S> series_invert(const Series<S>& s) {
  if (s.coeff(0) == S(0)) throw std::domain_error("series_invert: not a unit");
  const int n = s.order();
  Series<S> r(n);
  const S c0inv = S(1) / s.coeff(0);
  r.coeff(0) = c0inv;
  for (int k = 1; k < n; ++k) {
    S acc(0);
    for (int i = 1; i <= k; ++i) acc += s.coeff(i) * r.coeff(k - i);
    r.coeff(k) = -c0inv * acc;
  }
  return r;
}

// --- Dual numbers ----------------------------------------------------------

// base + eps-part * eps over S[u], with eps^2 == 0.
template <class S>
struct Dual {
  Poly1<S> base;
  Poly1<S> eps;

  friend Dual operator+(const Dual& a, const Dual& b) { return {a.base + b.base, a.eps + b.eps}; }
  friend Dual operator-(const Dual& a, const Dual& b) { return {a.base - b.base, a.eps - b.eps}; }
  friend Dual operator*(const Dual& a, const Dual& b) {
    return {a.base * b.base, a.base * b.eps + a.eps * b.base};
  }
  friend bool operator==(const Dual& a, const Dual& b) { return a.base == b.base && a.eps == b.eps; }

  std::string str(const std::string& var, const std::string& epsname) const {
    return "(" + base.str(var) + ") + (" + eps.str(var) + ")*" + epsname;
  }
};

using DualPoly = Dual<Rational>;

}  // namespace hilb2

#endif
