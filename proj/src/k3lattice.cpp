#include "k3gon/k3lattice.hpp"

#include "k3gon/errors.hpp"

namespace k3gon {

namespace {
// The certificates only care about definite No verdicts, which come from the
// parity filter and the square test; the search bound is irrelevant to them.
constexpr i64 kCertBound = 32;
}  // namespace

K3Lattice::K3Lattice(const Params& p)
    : params_(p),
      form_(BinaryQuadForm::from_params(p)),
      no_neg2_(represents(form_, -1, kCertBound).is_no()),
      no_pencil_(form_.a != 0 && represents_zero(form_).is_no()) {}

i64 K3Lattice::intersect(DivClass x, DivClass y) const {
  i64 hh = 2 * params_.r - 2;
  i64 cc = 2 * params_.g - 2;
  i64 t1 = checked_mul(hh, checked_mul(x.m, y.m));
  i64 t2 = checked_mul(params_.d, checked_add(checked_mul(x.m, y.n), checked_mul(x.n, y.m)));
  i64 t3 = checked_mul(cc, checked_mul(x.n, y.n));
  return checked_add(checked_add(t1, t2), t3);
}

i64 K3Lattice::self_int(DivClass x) const { return intersect(x, x); }

void K3Lattice::require_certified(const char* op) const {
  if (!certified())
    throw UncertifiedLattice(std::string(op) +
                             ": lattice lacks the (-2)-curve / elliptic-pencil certificates");
}

bool K3Lattice::is_effective(DivClass x) const {
  require_certified("is_effective");
  return self_int(x) >= 0 && intersect(x, kHyperplane) > 2;
}

bool K3Lattice::is_q_effective(DivClass x) const {
  require_certified("is_q_effective");
  if (x == DivClass{0, 0}) return true;
  return self_int(x) >= 0 && intersect(x, kHyperplane) > 0;
}

K3Lattice::Ampleness K3Lattice::c_is_ample() const {
  i64 d2 = checked_mul(params_.d, params_.d);
  i64 rhs = checked_mul(4, checked_mul(params_.g, params_.r - 1));
  return d2 > rhs ? Ampleness::Yes : Ampleness::Unknown;
}

}  // namespace k3gon
