#include "k3gon/invariants.hpp"

#include <stdexcept>

namespace k3gon {

Params::Params(i64 d_, i64 g_, i64 r_) : d(d_), g(g_), r(r_) {
  if (d < 1) throw std::invalid_argument("Params: degree d must be >= 1");
  if (g < 0) throw std::invalid_argument("Params: genus g must be >= 0");
  if (r < 1) throw std::invalid_argument("Params: ambient dimension r must be >= 1");
}

i64 brill_noether_number(const Params& p) {
  // g - (r+1)(g-d+r)
  i64 defect = checked_add(checked_sub(p.g, p.d), p.r);
  return checked_sub(p.g, checked_mul(p.r + 1, defect));
}

i64 expected_gonality(const Params& p) {
  i64 secant = checked_add(checked_sub(p.d, 2 * p.r), 2);
  i64 generic = floor_div(p.g + 3, 2);
  return secant < generic ? secant : generic;
}

i64 generic_gonality(i64 g) {
  if (g < 2) throw std::domain_error("generic_gonality: requires g >= 2");
  return floor_div(g + 3, 2);
}

i64 gonal_locus_dim(i64 g, i64 k) {
  // The dimension formula holds only for 2 <= k <= (g+2)/2, read as 2k <= g+2.
  if (k < 2 || 2 * k > g + 2)
    throw std::domain_error("gonal_locus_dim: k outside [2, (g+2)/2]");
  return checked_sub(checked_add(checked_mul(2, g), checked_mul(2, k)), 5);
}

i64 hilbert_expected_dim(const Params& p) {
  if (p.r < 3) throw std::domain_error("hilbert_expected_dim: requires r >= 3");
  return checked_sub(checked_mul(p.r + 1, p.d), checked_mul(p.r - 3, p.g - 1));
}

i64 secant_expected_dim(i64 r, i64 e) {
  if (r < 2) throw std::domain_error("secant_expected_dim: requires r >= 2");
  if (e < 1) throw std::domain_error("secant_expected_dim: requires e >= 1");
  return 2 * r - 2 - e;
}

i64 clifford_of_divisor(i64 deg, i64 h0) {
  if (h0 < 1) throw std::domain_error("clifford_of_divisor: requires h0 >= 1");
  if (deg < 0) throw std::domain_error("clifford_of_divisor: requires deg >= 0");
  return checked_sub(deg, checked_mul(2, h0 - 1));
}

i64 generic_clifford_index(i64 g) { return floor_div(g - 1, 2); }

i64 isqrt(i64 x) {
  if (x < 0) throw std::domain_error("isqrt: negative argument");
  if (x < 2) return x;
  // Newton iteration on integers; converges from above.
  i64 guess = x;
  i64 next = (guess + 1) / 2;
  while (next < guess) {
    guess = next;
    next = (guess + x / guess) / 2;
  }
  while (checked_mul(guess, guess) > x) --guess;
  return guess;
}

std::optional<i64> perfect_square_root(i64 x) {
  if (x < 0) return std::nullopt;
  i64 root = isqrt(x);
  if (checked_mul(root, root) == x) return root;
  return std::nullopt;
}

}  // namespace k3gon
