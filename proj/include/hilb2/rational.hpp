#ifndef HILB2_RATIONAL_HPP
#define HILB2_RATIONAL_HPP

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Dense>

#include <cstdint>
#include <string>
#include <vector>

namespace hilb2 {

// Exact arithmetic scalar: arbitrary-precision rational, always in lowest
// terms with positive denominator (maintained by the GMP backend).
using Rational = boost::multiprecision::mpq_rational;
using Integer = boost::multiprecision::mpz_int;

using Index = Eigen::Index;

template <class Scalar>
using DenseMat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <class Scalar>
using DenseVec = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using MatrixQ = DenseMat<Rational>;
using VectorQ = DenseVec<Rational>;

inline Integer numer(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Integer denom(const Rational& q) { return boost::multiprecision::denominator(q); }

// Renders "p/q" in lowest terms, or "p" when the denominator is 1.
inline std::string to_string(const Rational& q) { return q.str(); }

Rational rational_from_string(const std::string& s);

// Deterministic, platform-independent pseudo-random source (splitmix64).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed + 0x9e3779b97f4a7c15ULL) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform in [lo, hi], inclusive.
  long uniform(long lo, long hi) {
    return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
  }

  // Uniform in [lo, hi] \ {0}.
  long nonzero(long lo, long hi) {
    long v = uniform(lo, hi);
    while (v == 0) v = uniform(lo, hi);
    return v;
  }

  Rational rational(long max_abs_num, long max_den) {
    return Rational(uniform(-max_abs_num, max_abs_num), uniform(1, max_den));
  }

 private:
  std::uint64_t state_;
};

// Stable 64-bit FNV-1a hash, used to derive per-check random streams.
inline std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

inline Index binom2(Index n) { return n * (n - 1) / 2; }

}  // namespace hilb2

#endif
