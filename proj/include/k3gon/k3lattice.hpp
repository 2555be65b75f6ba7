#ifndef K3GON_K3LATTICE_HPP
#define K3GON_K3LATTICE_HPP

#include "k3gon/qform.hpp"

namespace k3gon {

/// The class mH + nC in Pic(S) = ZH + ZC.
struct DivClass {
  i64 m;
  i64 n;
  bool operator==(const DivClass&) const = default;
};

inline constexpr DivClass kHyperplane{1, 0};
inline constexpr DivClass kCurve{0, 1};

/// Rank-2 Picard lattice of a K3 surface of degree 2r-2 in P^r carrying a
/// degree-d genus-g curve: Gram matrix [[2r-2, d], [d, 2g-2]].
///
/// Construction computes two certificates from the associated quadratic form:
/// no (-2)-curves (Q never takes -1) and no elliptic pencils (Q never takes
/// 0 nontrivially). The effectiveness criteria require both; intersection
/// numbers do not.
class K3Lattice {
 public:
  explicit K3Lattice(const Params& p);

  const Params& params() const { return params_; }
  const BinaryQuadForm& form() const { return form_; }
  bool has_no_neg2_curves() const { return no_neg2_; }
  bool has_no_elliptic_pencils() const { return no_pencil_; }
  bool certified() const { return no_neg2_ && no_pencil_; }

  /// Bilinear pairing (2r-2)m1m2 + d(m1n2 + m2n1) + (2g-2)n1n2.
  i64 intersect(DivClass x, DivClass y) const;

  /// intersect(x, x); equals 2 Q(m, n).
  i64 self_int(DivClass x) const;

  /// Effectiveness of a nonzero class: D^2 >= 0 and D.H > 2. The zero class
  /// is reported not effective. Throws UncertifiedLattice without both
  /// certificates.
  bool is_effective(DivClass x) const;

  /// Ray test: D = 0, or D^2 >= 0 and D.H > 0 (some positive multiple is
  /// effective). Throws UncertifiedLattice without both certificates.
  bool is_q_effective(DivClass x) const;

  enum class Ampleness { Yes, Unknown };

  /// Sufficient condition d^2 > 4g(r-1) for ampleness of C; never a disproof.
  Ampleness c_is_ample() const;

 private:
  void require_certified(const char* op) const;

  Params params_;
  BinaryQuadForm form_;
  bool no_neg2_;
  bool no_pencil_;
};

}  // namespace k3gon

#endif
