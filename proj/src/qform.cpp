#include "k3gon/qform.hpp"

#include <array>
#include <numeric>
#include <stdexcept>
#include <tuple>

#include "k3gon/errors.hpp"

namespace k3gon {

i64 BinaryQuadForm::value(i64 m, i64 n) const {
  i64 am2 = checked_mul(a, checked_mul(m, m));
  i64 bmn = checked_mul(b, checked_mul(m, n));
  i64 cn2 = checked_mul(c, checked_mul(n, n));
  return checked_add(checked_add(am2, bmn), cn2);
}

i64 BinaryQuadForm::discriminant() const {
  return checked_sub(checked_mul(b, b), checked_mul(4, checked_mul(a, c)));
}

namespace {

// Ordering used for deterministic witness reporting.
auto witness_key(const Witness& w) {
  i64 am = w.m < 0 ? -w.m : w.m;
  i64 an = w.n < 0 ? -w.n : w.n;
  return std::make_tuple(an, am, w.n, w.m);
}

Witness reduce_and_orient(i64 m, i64 n) {
  i64 am = m < 0 ? -m : m;
  i64 an = n < 0 ? -n : n;
  i64 g = std::gcd(am, an);
  if (g > 1) {
    m /= g;
    n /= g;
  }
  if (n < 0 || (n == 0 && m < 0)) {
    m = -m;
    n = -n;
  }
  return {m, n};
}

}  // namespace

ReprResult represents_zero(const BinaryQuadForm& f) {
  if (f.a == 0)
    throw std::domain_error("represents_zero: degenerate form with a = 0");
  auto root = perfect_square_root(f.discriminant());
  if (!root) return ReprResult::no_square_test();
  // Q factors over Q; each root t of a t^2 + b t + c gives the zero
  // (m, n) = (-b +- s, 2a) up to scaling.
  i64 s = *root;
  Witness w1 = reduce_and_orient(checked_add(-f.b, s), checked_mul(2, f.a));
  Witness w2 = reduce_and_orient(checked_sub(-f.b, s), checked_mul(2, f.a));
  Witness best = witness_key(w1) <= witness_key(w2) ? w1 : w2;
  if (f.value(best.m, best.n) != 0)
    throw InternalInvariantViolation("represents_zero: factored root is not a zero");
  return ReprResult::yes(best);
}

ReprResult represents(const BinaryQuadForm& f, i64 target, i64 bound) {
  if (bound < 1) throw std::invalid_argument("represents: bound must be >= 1");

  // Parity filter: Q mod 2 only depends on the parity class of (m,n).
  i64 t2 = ((target % 2) + 2) % 2;
  bool parity_reachable = false;
  for (i64 mp : {0, 1})
    for (i64 np : {0, 1})
      if (((f.value(mp, np) % 2) + 2) % 2 == t2) parity_reachable = true;
  if (!parity_reachable) return ReprResult::no_parity();

  if (target == 0) return represents_zero(f);

  // Exhaustive box search, visited in (|n|,|m|,n,m) order so the first hit
  // is the reported witness.
  for (i64 an = 0; an <= bound; ++an) {
    for (i64 am = 0; am <= bound; ++am) {
      const std::array<i64, 2> ns{-an, an};
      const std::array<i64, 2> ms{-am, am};
      for (int ni = (an == 0 ? 1 : 0); ni < 2; ++ni) {
        for (int mi = (am == 0 ? 1 : 0); mi < 2; ++mi) {
          i64 m = ms[mi];
          i64 n = ns[ni];
          if (f.value(m, n) == target) return ReprResult::yes({m, n});
        }
      }
    }
  }
  return ReprResult::unknown(bound);
}

}  // namespace k3gon
