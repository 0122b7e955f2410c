#ifndef HILB2_RATFUNC_HPP
#define HILB2_RATFUNC_HPP

#include <stdexcept>
#include <string>

#include "hilb2/poly.hpp"
#include "hilb2/rational.hpp"

namespace hilb2 {

// Element of Q(t): num/den with den monic and gcd(num, den) == 1.
class RatFuncQ {
 public:
  RatFuncQ() : num_(), den_(PolyQ(Rational(1))) {}
  RatFuncQ(Rational c) : num_(PolyQ(std::move(c))), den_(PolyQ(Rational(1))) {}
  RatFuncQ(long c) : RatFuncQ(Rational(c)) {}
  explicit RatFuncQ(PolyQ p) : num_(std::move(p)), den_(PolyQ(Rational(1))) {}
  RatFuncQ(PolyQ num, PolyQ den) : num_(std::move(num)), den_(std::move(den)) { normalize(); }

  const PolyQ& num() const { return num_; }
  const PolyQ& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.degree() == 0; }

  // Value at t = 0; requires den(0) != 0.
  Rational at_zero() const {
    const Rational d = den_.eval(Rational(0));
    if (d.is_zero()) throw std::domain_error("pole at t = 0");
    return num_.eval(Rational(0)) / d;
  }

  friend RatFuncQ operator+(const RatFuncQ& a, const RatFuncQ& b) {
    return RatFuncQ(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RatFuncQ operator-(const RatFuncQ& a, const RatFuncQ& b) {
    return RatFuncQ(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RatFuncQ operator*(const RatFuncQ& a, const RatFuncQ& b) {
    return RatFuncQ(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend RatFuncQ operator/(const RatFuncQ& a, const RatFuncQ& b) {
    if (b.is_zero()) throw std::domain_error("division by zero in Q(t)");
    return RatFuncQ(a.num_ * b.den_, a.den_ * b.num_);
  }
  RatFuncQ operator-() const {
    RatFuncQ r = *this;
    r.num_ = -r.num_;
    return r;
  }
  RatFuncQ& operator+=(const RatFuncQ& o) { return *this = *this + o; }
  RatFuncQ& operator-=(const RatFuncQ& o) { return *this = *this - o; }
  RatFuncQ& operator*=(const RatFuncQ& o) { return *this = *this * o; }

  friend bool operator==(const RatFuncQ& a, const RatFuncQ& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const RatFuncQ& a, const RatFuncQ& b) { return !(a == b); }

  std::string str(const std::string& var = "t") const {
    if (is_polynomial()) return num_.str(var);
    return "(" + num_.str(var) + ")/(" + den_.str(var) + ")";
  }

 private:
  void normalize() {
    if (den_.is_zero()) throw std::domain_error("zero denominator in Q(t)");
    if (num_.is_zero()) {
      den_ = PolyQ(Rational(1));
      return;
    }
    const PolyQ g = poly_gcd(num_, den_);
    if (g.degree() > 0) {
      num_ = divmod(num_, g).first;
      den_ = divmod(den_, g).first;
    }
    const Rational lead = den_.leading();
    if (!(lead == Rational(1))) {
      const Rational inv = Rational(1) / lead;
      num_ = inv * num_;
      den_ = inv * den_;
    }
  }

  PolyQ num_, den_;
};

// Q(t) as a field policy for the generic elimination.
struct QtField {
  using Scalar = RatFuncQ;
  Scalar zero() const { return RatFuncQ(); }
  Scalar one() const { return RatFuncQ(Rational(1)); }
  bool is_zero(const Scalar& a) const { return a.is_zero(); }
  Scalar add(const Scalar& a, const Scalar& b) const { return a + b; }
  Scalar sub(const Scalar& a, const Scalar& b) const { return a - b; }
  Scalar mul(const Scalar& a, const Scalar& b) const { return a * b; }
  Scalar div(const Scalar& a, const Scalar& b) const { return a / b; }
  Scalar neg(const Scalar& a) const { return -a; }
};

using MatrixQt = DenseMat<RatFuncQ>;
using VectorQt = DenseVec<RatFuncQ>;

}  // namespace hilb2

namespace Eigen {

// Minimal scalar-type adaptor so Q(t) entries can live in Eigen matrices.
template <>
struct NumTraits<hilb2::RatFuncQ> {
  using Real = hilb2::RatFuncQ;
  using NonInteger = hilb2::RatFuncQ;
  using Literal = hilb2::RatFuncQ;
  using Nested = hilb2::RatFuncQ;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 64,
    MulCost = 64
  };
  static Real epsilon() { return Real(); }
  static Real dummy_precision() { return Real(); }
  static int digits10() { return 0; }
};

}  // namespace Eigen

#endif
