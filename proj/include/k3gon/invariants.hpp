#ifndef K3GON_INVARIANTS_HPP
#define K3GON_INVARIANTS_HPP

#include <optional>

#include "k3gon/arith.hpp"

namespace k3gon {

/// A curve parameter triple: degree d, genus g, ambient projective dimension r.
struct Params {
  i64 d;
  i64 g;
  i64 r;

  // Throws std::invalid_argument unless d >= 1, g >= 0, r >= 1.
  Params(i64 d, i64 g, i64 r);
};

/// Brill-Noether number rho = g - (r+1)(g-d+r). Negative rho means curves
/// with a g^r_d are special.
i64 brill_noether_number(const Params& p);

/// min(d-2r+2, floor((g+3)/2)) for a nondegenerate degree-d genus-g curve
/// in P^r.
i64 expected_gonality(const Params& p);

/// Gonality of the general genus-g curve, floor((g+3)/2). Requires g >= 2.
i64 generic_gonality(i64 g);

/// Dimension 2g+2k-5 of the k-gonal locus inside moduli. Only valid for
/// 2 <= k and 2k <= g+2; out-of-range k throws std::domain_error.
i64 gonal_locus_dim(i64 g, i64 k);

/// Expected dimension (r+1)d - (r-3)(g-1) of the Hilbert scheme of curves
/// in P^r. Requires r >= 3 (for r = 3 this is just 4d).
i64 hilbert_expected_dim(const Params& p);

/// Expected dimension 2r-2-e of the variety of e-secant (r-2)-plane
/// divisors; negative means expected-empty. Requires r >= 2, e >= 1.
i64 secant_expected_dim(i64 r, i64 e);

/// Cliff(D) = deg(D) - 2(h0(D) - 1). Requires h0 >= 1, deg >= 0.
i64 clifford_of_divisor(i64 deg, i64 h0);

/// Generic value floor((g-1)/2) of the Clifford index in genus g.
i64 generic_clifford_index(i64 g);

/// Floor of the square root, computed by integer Newton iteration.
/// Requires x >= 0. No floating point anywhere.
i64 isqrt(i64 x);

/// The exact root when x is a perfect square, nullopt otherwise.
std::optional<i64> perfect_square_root(i64 x);

inline bool is_perfect_square(i64 x) { return perfect_square_root(x).has_value(); }

}  // namespace k3gon

#endif
