#ifndef K3GON_VERIFIER_HPP
#define K3GON_VERIFIER_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "k3gon/k3lattice.hpp"

namespace k3gon {

/// One named numeric hypothesis together with its outcome.
struct HypothesisFlag {
  std::string name;
  bool ok;
};

struct HypothesisReport {
  std::vector<HypothesisFlag> flags;

  bool all_ok() const;
  bool flag(std::string_view name) const;  // throws if the name is unknown
  std::string first_failure() const;       // empty when all_ok()
};

/// The constraint system cutting out the divisor family A:
///   (i)   (r-1)m^2 + mnd + n^2(g-1) > 0
///   (ii)  2 < (2r-2)m + nd < d-2
///   (iii) md + (2n-1)(g-1) <= 0
/// strict_mode additionally requires (C-D)^2 > 0.
struct ConstraintA {
  Params params;
  bool strict_mode = false;
};

/// f(m,n) = D.C - D^2 = -(2r-2)m^2 + m(d-2nd) + (n-n^2)(2g-2).
i64 f_value(const Params& p, DivClass d);

bool in_A(const ConstraintA& c, DivClass d);

/// Exact integer solutions of the A constraints together with the n-interval
/// the enumeration provably covers.
struct AEnumeration {
  std::vector<DivClass> members;  // sorted by (n, m)
  i64 n_min;
  i64 n_max;
};

/// Enumerates A completely. Requires d >= 5 and d^2 > 4(r-1)(g-1) for the
/// termination argument; throws std::domain_error otherwise.
AEnumeration enumerate_A(const ConstraintA& c);

struct AlphaReport {
  std::optional<i64> alpha;        // absent only when A is empty
  std::vector<DivClass> minimizers;
  std::vector<DivClass> enumerated;
  i64 n_min = 0;
  i64 n_max = 0;
  bool guaranteed = false;         // the applicability hypotheses all held
  HypothesisReport hypotheses;
};

/// Minimizes f over A. With require_applicable, a failed hypothesis throws
/// HypothesisViolation; otherwise the report is returned unguaranteed. When
/// the hypotheses hold, alpha = d-2r+2 and the minimizer set is {H}, plus
/// {C-H} exactly when d = g-1; any other outcome throws
/// InternalInvariantViolation.
AlphaReport compute_alpha(const Params& p, bool strict_a = false,
                          bool require_applicable = true);

/// Vanishing of H^1 of the normal bundle for a K3-section in P^3:
/// d <= 18 or g < 4d-31. Dually, the class C-4H is not effective.
bool h1_normal_vanishes(i64 d, i64 g);

struct VeryAmpleResult {
  std::optional<DivClass> violator;
  bool no_violator_found() const { return !violator.has_value(); }
};

/// Numerical k-very-ampleness check for |C|: searches for an effective D
/// with C-2D Q-effective and C.D - (k+1) <= D^2 <= C.D/2 < k+1. Finding
/// none certifies k-very-ampleness; a violator is inconclusive and is
/// reported as a witness. Requires a certified lattice with positive
/// form discriminant.
VeryAmpleResult check_very_ample_order(const Params& p, i64 k);

enum class MoriCase {
  NotExists,
  ExistsBoundary,  // 8(g-1) = d^2; complete intersection of type (4, d/4)
  ExistsInterior,  // 8g < d^2 and (d,g) != (5,3)
};

/// Existence of a smooth degree-d genus-g curve on a smooth quartic in P^3.
MoriCase mori_exists(i64 d, i64 g);

/// Rathmann's condition d^2 >= 4g(r-1) + (r-1)^2 for a K3 of degree 2r-2
/// in P^r carrying the curve with Picard rank 2.
bool rathmann_exists(const Params& p);

/// Numeric hypotheses of the gonality theorem for K3-sections.
HypothesisReport theorem3_applicable(const Params& p);

struct DerivedPair {
  i64 d;
  i64 g;
  i64 expected_gonality;
  bool operator==(const DerivedPair&) const = default;
};

struct Theorem1Report {
  HypothesisReport hypotheses;
  std::vector<DerivedPair> pairs;  // nonempty iff all hypotheses hold
  bool applicable() const { return hypotheses.all_ok(); }
};

/// Numeric hypotheses of the main existence theorem in P^3 and, when they
/// hold, the four (d',g') pairs with their expected gonalities.
Theorem1Report theorem1_applicable(i64 d, i64 g);

struct BnDivisorSolution {
  i64 r;
  i64 d;
  bool operator==(const BnDivisorSolution&) const = default;
};

/// All (r,d) with r >= 1, r+1 <= d <= g-1 and rho(g,r,d) = -1, found by
/// factoring g+1 (rho = -1 iff (r+1)(g-d+r) = g+1). Requires g >= 2.
std::vector<BnDivisorSolution> bn_divisor_solutions(i64 g);

}  // namespace k3gon

#endif
