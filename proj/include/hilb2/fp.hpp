#ifndef HILB2_FP_HPP
#define HILB2_FP_HPP

#include <cstdint>

#include "hilb2/linalg.hpp"
#include "hilb2/rational.hpp"

namespace hilb2 {

bool is_prime(std::int64_t n);

// The prime field F_p, p <= 2^31, as a field policy over int64 residues
// normalized to [0, p). Products stay below 2^62.
struct ZpField {
  using Scalar = std::int64_t;

  explicit ZpField(std::int64_t prime);

  std::int64_t p;

  Scalar zero() const { return 0; }
  Scalar one() const { return 1; }
  bool is_zero(Scalar a) const { return a == 0; }
  Scalar add(Scalar a, Scalar b) const { return (a + b) % p; }
  Scalar sub(Scalar a, Scalar b) const { return ((a - b) % p + p) % p; }
  Scalar mul(Scalar a, Scalar b) const { return (a * b) % p; }
  Scalar neg(Scalar a) const { return (p - a) % p; }
  Scalar inv(Scalar a) const;
  Scalar div(Scalar a, Scalar b) const { return mul(a, inv(b)); }

  Scalar reduce_int(const Integer& z) const;
  // Throws when the denominator vanishes mod p.
  Scalar reduce(const Rational& q) const;
};

using MatrixFp = DenseMat<std::int64_t>;

// Entrywise reduction of a rational matrix mod p.
MatrixFp reduce_mod(const MatrixQ& m, const ZpField& F);

// Rank and kernel over F_p; same contracts as rref_rank_kernel, mod p.
FieldRref<ZpField> prime_field_solve(const ZpField& F, const MatrixFp& m);

}  // namespace hilb2

#endif
