#ifndef HILB2_SLOPE_HPP
#define HILB2_SLOPE_HPP

#include "hilb2/bielliptic.hpp"
#include "hilb2/rational.hpp"

namespace hilb2 {

// Degrees of the standard divisor classes on a one-parameter family of
// Gorenstein curves, as abstract exact numbers. The relations
// delta = 13 lambda - lambda2 and kappa = 12 lambda - delta are maintained
// by construction.
struct FamilyInvariants {
  Rational lambda, delta, lambda2, kappa;

  static FamilyInvariants from_lambda_delta(Rational lambda, Rational delta);

  Rational slope() const;  // delta / lambda
};

// The slope bound 7 + 6/g for families with a semistable general fiber.
Rational ch_bound(int g);

struct ChVerdict {
  bool slope_within_bound = false;   // delta/lambda <= 7 + 6/g
  bool lambda2_within_bound = false; // lambda2 >= 2(3g-3) lambda / g

  bool consistent() const { return slope_within_bound == lambda2_within_bound; }
  bool satisfied() const { return slope_within_bound; }
};

// Checks the bound in both equivalent forms; requires lambda > 0.
ChVerdict verify_ch(const FamilyInvariants& inv, int g);

// The constant family E x B double-covered along a divisor of square Dsq:
// delta = Dsq, kappa = Dsq/2, lambda = Dsq/8, slope exactly 8.
FamilyInvariants bielliptic_family(long dsq);

struct ReferenceSlopes {
  Rational ch_classic;       // 8 + 4/g
  Rational this_bound;       // 7 + 6/g
  Rational trigonal_sweep;   // 7 + 20/(3g+1)
  Rational trigonal_maroni;  // 36(g+1)/(5g+1)
};

ReferenceSlopes reference_slopes(int g);

struct BiellipticConflict {
  bool slope_exceeds_bound = false;  // 8 > 7 + 6/g
  bool weight_bound_negative = false;  // -(g-1)(g-6) < 0

  bool agree() const { return slope_exceeds_bound == weight_bound_negative; }
};

// The slope-8 bielliptic family violates the bound exactly when the cone
// weight bound is negative (g >= 7).
BiellipticConflict bielliptic_conflict_check(int g);

}  // namespace hilb2

#endif
