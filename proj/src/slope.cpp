#include "hilb2/slope.hpp"

#include <stdexcept>

namespace hilb2 {

FamilyInvariants FamilyInvariants::from_lambda_delta(Rational lambda, Rational delta) {
  FamilyInvariants inv;
  inv.lambda = std::move(lambda);
  inv.delta = std::move(delta);
  inv.lambda2 = 13 * inv.lambda - inv.delta;
  inv.kappa = 12 * inv.lambda - inv.delta;
  return inv;
}

Rational FamilyInvariants::slope() const {
  if (lambda.is_zero()) throw std::domain_error("slope undefined: lambda = 0");
  return delta / lambda;
}

Rational ch_bound(int g) {
  if (g < 2) throw std::invalid_argument("ch_bound needs g >= 2");
  return Rational(7 * g + 6, g);
}

ChVerdict verify_ch(const FamilyInvariants& inv, int g) {
  if (!(inv.lambda > 0)) throw std::invalid_argument("verify_ch requires lambda > 0");
  ChVerdict v;
  v.slope_within_bound = inv.delta / inv.lambda <= ch_bound(g);
  v.lambda2_within_bound = inv.lambda2 >= Rational(2 * (3 * g - 3), g) * inv.lambda;
  return v;
}

FamilyInvariants bielliptic_family(long dsq) {
  if (dsq <= 0 || dsq % 2 != 0)
    throw std::invalid_argument("bielliptic family needs a positive even D^2");
  FamilyInvariants inv = FamilyInvariants::from_lambda_delta(Rational(dsq, 8), Rational(dsq));
  if (inv.kappa != Rational(dsq, 2)) throw std::logic_error("kappa bookkeeping mismatch");
  return inv;
}

ReferenceSlopes reference_slopes(int g) {
  if (g < 3) throw std::invalid_argument("reference slopes need g >= 3");
  ReferenceSlopes r;
  r.ch_classic = Rational(8 * g + 4, g);
  r.this_bound = ch_bound(g);
  r.trigonal_sweep = Rational(7) + Rational(20, 3 * g + 1);
  r.trigonal_maroni = Rational(36 * (g + 1), 5 * g + 1);
  return r;
}

BiellipticConflict bielliptic_conflict_check(int g) {
  if (g < 6) throw std::invalid_argument("bielliptic conflict check needs g >= 6");
  BiellipticConflict c;
  c.slope_exceeds_bound = Rational(8) > ch_bound(g);
  c.weight_bound_negative = cone_weight_bound(g).bound < 0;
  return c;
}

}  // namespace hilb2
