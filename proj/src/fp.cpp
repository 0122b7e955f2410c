#include "hilb2/fp.hpp"

#include <stdexcept>

namespace hilb2 {

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::int64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

ZpField::ZpField(std::int64_t prime) : p(prime) {
  if (p > (std::int64_t(1) << 31)) throw std::invalid_argument("modulus exceeds 2^31");
  if (!is_prime(p)) throw std::invalid_argument("modulus is not prime");
}

std::int64_t ZpField::inv(Scalar a) const {
  if (a == 0) throw std::domain_error("division by zero mod p");
  // Extended Euclid.
  std::int64_t r0 = p, r1 = a % p, s0 = 0, s1 = 1;
  while (r1 != 0) {
    const std::int64_t q = r0 / r1;
    r0 -= q * r1;
    std::swap(r0, r1);
    s0 -= q * s1;
    std::swap(s0, s1);
  }
  return ((s0 % p) + p) % p;
}

std::int64_t ZpField::reduce_int(const Integer& z) const {
  Integer r = z % p;
  if (r < 0) r += p;
  return static_cast<std::int64_t>(r);
}

std::int64_t ZpField::reduce(const Rational& q) const {
  const Scalar d = reduce_int(denom(q));
  if (d == 0) throw std::domain_error("denominator vanishes mod p");
  return mul(reduce_int(numer(q)), inv(d));
}

MatrixFp reduce_mod(const MatrixQ& m, const ZpField& F) {
  MatrixFp out(m.rows(), m.cols());
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j) out(i, j) = F.reduce(m(i, j));
  return out;
}

FieldRref<ZpField> prime_field_solve(const ZpField& F, const MatrixFp& m) {
  return field_rref_rank_kernel(F, m);
}

}  // namespace hilb2
