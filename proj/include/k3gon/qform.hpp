#ifndef K3GON_QFORM_HPP
#define K3GON_QFORM_HPP

#include <optional>

#include "k3gon/invariants.hpp"

namespace k3gon {

/// Q(m,n) = a m^2 + b mn + c n^2 with integer coefficients. Forms built from
/// Params have a = r-1, b = d, c = g-1; the targets of interest are 0 (an
/// elliptic pencil on the K3) and -1 (a (-2)-curve).
struct BinaryQuadForm {
  i64 a;
  i64 b;
  i64 c;

  static BinaryQuadForm from_params(const Params& p) { return {p.r - 1, p.d, p.g - 1}; }

  i64 value(i64 m, i64 n) const;

  /// b^2 - 4ac; for a Params form this is d^2 - 4(r-1)(g-1).
  i64 discriminant() const;
};

struct Witness {
  i64 m;
  i64 n;
  bool operator==(const Witness&) const = default;
};

/// Outcome of a representability query. Yes always carries a witness verified
/// by substitution; the two No reasons are complete obstructions; Unknown
/// records the exhausted search bound.
struct ReprResult {
  enum class Verdict { Yes, NoParity, NoSquareTest, Unknown };

  Verdict verdict;
  std::optional<Witness> witness;  // present iff Yes
  i64 bound = 0;                   // meaningful iff Unknown

  bool is_yes() const { return verdict == Verdict::Yes; }
  bool is_no() const {
    return verdict == Verdict::NoParity || verdict == Verdict::NoSquareTest;
  }

  static ReprResult yes(Witness w) { return {Verdict::Yes, w, 0}; }
  static ReprResult no_parity() { return {Verdict::NoParity, std::nullopt, 0}; }
  static ReprResult no_square_test() { return {Verdict::NoSquareTest, std::nullopt, 0}; }
  static ReprResult unknown(i64 bound) { return {Verdict::Unknown, std::nullopt, bound}; }
};

/// Decides whether Q has a nontrivial zero (m,n) != (0,0). Complete: for
/// a != 0 a nontrivial zero exists iff the discriminant is a perfect square,
/// and then a witness comes from the factored roots. Rejects a = 0.
ReprResult represents_zero(const BinaryQuadForm& f);

/// Three-stage pipeline: parity obstruction, square test (target 0 only),
/// then exhaustive search over |m|,|n| <= bound. Yes witnesses are the
/// lexicographically smallest (|n|,|m|,n,m) solution in the box.
ReprResult represents(const BinaryQuadForm& f, i64 target, i64 bound = 1000);

}  // namespace k3gon

#endif
