#include "k3gon/verifier.hpp"

#include <algorithm>
#include <stdexcept>

#include "k3gon/errors.hpp"

namespace k3gon {

bool HypothesisReport::all_ok() const {
  return std::all_of(flags.begin(), flags.end(),
                     [](const HypothesisFlag& f) { return f.ok; });
}

bool HypothesisReport::flag(std::string_view name) const {
  for (const auto& f : flags)
    if (f.name == name) return f.ok;
  throw std::invalid_argument("HypothesisReport: unknown flag " + std::string(name));
}

std::string HypothesisReport::first_failure() const {
  for (const auto& f : flags)
    if (!f.ok) return f.name;
  return {};
}

i64 f_value(const Params& p, DivClass dc) {
  i64 hh = 2 * p.r - 2;
  i64 cc = 2 * p.g - 2;
  // -(2r-2)m^2 + m(d - 2nd) + (n - n^2)(2g-2)
  i64 t1 = checked_mul(-hh, checked_mul(dc.m, dc.m));
  i64 t2 = checked_mul(dc.m, checked_sub(p.d, checked_mul(2, checked_mul(dc.n, p.d))));
  i64 t3 = checked_mul(checked_sub(dc.n, checked_mul(dc.n, dc.n)), cc);
  return checked_add(checked_add(t1, t2), t3);
}

bool in_A(const ConstraintA& c, DivClass dc) {
  const Params& p = c.params;
  BinaryQuadForm q = BinaryQuadForm::from_params(p);
  if (q.value(dc.m, dc.n) <= 0) return false;                               // (i)
  i64 dh = checked_add(checked_mul(2 * p.r - 2, dc.m), checked_mul(dc.n, p.d));
  if (!(2 < dh && dh < p.d - 2)) return false;                              // (ii)
  i64 dot = checked_add(checked_mul(dc.m, p.d),
                        checked_mul(2 * dc.n - 1, p.g - 1));
  if (dot > 0) return false;                                               // (iii)
  if (c.strict_mode && q.value(-dc.m, 1 - dc.n) <= 0) return false;        // (C-D)^2 > 0
  return true;
}

namespace {

// Largest n >= 0 with disc * n^2 (strictly or weakly) below cap^2. Along any
// n-slice, condition (ii) confines m to a strip on which the convex Q peaks
// at the endpoints, where 4(r-1) Q = K^2 - disc n^2 for the strip bound K;
// beyond this n the slice is infeasible.
i64 feasible_n_radius(i64 disc, i64 cap, bool strict) {
  i64 cap2 = checked_mul(cap, cap);
  i64 n = 0;
  while (true) {
    i64 lhs = checked_mul(disc, checked_mul(n + 1, n + 1));
    bool ok = strict ? lhs < cap2 : lhs <= cap2;
    if (!ok) return n;
    ++n;
  }
}

}  // namespace

AEnumeration enumerate_A(const ConstraintA& c) {
  const Params& p = c.params;
  if (p.d < 5)
    throw std::domain_error("enumerate_A: requires d >= 5 (the (ii)-strip is empty otherwise)");
  if (p.r < 2)
    throw std::domain_error("enumerate_A: requires r >= 2");
  i64 disc = BinaryQuadForm::from_params(p).discriminant();
  if (disc <= 0)
    throw std::domain_error("enumerate_A: requires d^2 > 4(r-1)(g-1) for termination");

  i64 radius = feasible_n_radius(disc, p.d - 2, /*strict=*/true);
  i64 width = 2 * p.r - 2;

  AEnumeration out;
  out.n_min = -radius;
  out.n_max = radius;
  for (i64 n = -radius; n <= radius; ++n) {
    // Strict bounds 2 < (2r-2)m + nd < d-2.
    i64 m_lo = floor_div(2 - checked_mul(n, p.d), width) + 1;
    i64 m_hi = ceil_div(p.d - 2 - checked_mul(n, p.d), width) - 1;
    for (i64 m = m_lo; m <= m_hi; ++m)
      if (in_A(c, {m, n})) out.members.push_back({m, n});
  }
  return out;
}

AlphaReport compute_alpha(const Params& p, bool strict_a, bool require_applicable) {
  AlphaReport report;
  report.hypotheses = theorem3_applicable(p);
  report.guaranteed = report.hypotheses.all_ok();
  if (!report.guaranteed && require_applicable)
    throw HypothesisViolation("compute_alpha: hypothesis failed: " +
                              report.hypotheses.first_failure());

  AEnumeration en = enumerate_A({p, strict_a});
  report.enumerated = en.members;
  report.n_min = en.n_min;
  report.n_max = en.n_max;
  for (const DivClass& dc : en.members) {
    i64 f = f_value(p, dc);
    if (!report.alpha || f < *report.alpha) {
      report.alpha = f;
      report.minimizers = {dc};
    } else if (f == *report.alpha) {
      report.minimizers.push_back(dc);
    }
  }

  if (report.guaranteed) {
    std::vector<DivClass> expected{{1, 0}};
    if (p.d == p.g - 1) expected.push_back({-1, 1});  // (n,m) order: H then C-H
    if (!report.alpha || *report.alpha != p.d - 2 * p.r + 2 ||
        report.minimizers != expected)
      throw InternalInvariantViolation(
          "compute_alpha: guaranteed minimum d-2r+2 at {H} contradicted by enumeration");
  }
  return report;
}

bool h1_normal_vanishes(i64 d, i64 g) { return d <= 18 || g < 4 * d - 31; }

VeryAmpleResult check_very_ample_order(const Params& p, i64 k) {
  K3Lattice lat(p);
  if (!lat.certified())
    throw UncertifiedLattice("check_very_ample_order: lattice lacks certificates");
  i64 disc = lat.form().discriminant();
  if (disc <= 0)
    throw std::domain_error("check_very_ample_order: requires d^2 > 4(r-1)(g-1)");

  // Candidates have D.H in [3, floor(d/2)]: >= 3 from effectiveness and
  // <= d/2 from (C-2D).H >= 0.
  i64 dh_max = p.d / 2;
  if (dh_max < 3) return {};
  i64 radius = feasible_n_radius(disc, dh_max, /*strict=*/false);
  i64 width = 2 * p.r - 2;

  for (i64 n = -radius; n <= radius; ++n) {
    i64 m_lo = ceil_div(3 - checked_mul(n, p.d), width);
    i64 m_hi = floor_div(dh_max - checked_mul(n, p.d), width);
    for (i64 m = m_lo; m <= m_hi; ++m) {
      DivClass dc{m, n};
      if (!lat.is_effective(dc)) continue;
      DivClass residual{-2 * m, 1 - 2 * n};  // C - 2D
      if (!lat.is_q_effective(residual)) continue;
      i64 cd = lat.intersect(kCurve, dc);
      i64 dd = lat.self_int(dc);
      if (checked_mul(2, dd) > cd) continue;   // D^2 <= C.D/2
      if (cd >= 2 * (k + 1)) continue;         // C.D/2 < k+1
      if (cd - k - 1 > dd) continue;           // C.D - (k+1) <= D^2
      return {dc};
    }
  }
  return {};
}

MoriCase mori_exists(i64 d, i64 g) {
  if (d <= 0 || g < 0) throw std::domain_error("mori_exists: requires d > 0, g >= 0");
  i64 d2 = checked_mul(d, d);
  if (checked_mul(8, g - 1) == d2) return MoriCase::ExistsBoundary;
  if (checked_mul(8, g) < d2 && !(d == 5 && g == 3)) return MoriCase::ExistsInterior;
  return MoriCase::NotExists;
}

bool rathmann_exists(const Params& p) {
  if (p.g < 1 || p.r < 3)
    throw std::domain_error("rathmann_exists: requires g > 0 and r >= 3");
  i64 d2 = checked_mul(p.d, p.d);
  i64 rhs = checked_add(checked_mul(4, checked_mul(p.g, p.r - 1)),
                        checked_mul(p.r - 1, p.r - 1));
  return d2 >= rhs;
}

HypothesisReport theorem3_applicable(const Params& p) {
  HypothesisReport rep;
  rep.flags.push_back({"r_ge_3", p.r >= 3});
  rep.flags.push_back({"d_ge_r2_plus_r", p.d >= checked_mul(p.r, p.r + 1)});
  rep.flags.push_back({"rho_negative", brill_noether_number(p) < 0});

  i64 d2 = checked_mul(p.d, p.d);
  bool disc_ok = false;
  if (p.r == 3)
    disc_ok = d2 > checked_mul(8, p.g);
  else if (p.r >= 4)
    disc_ok = d2 > checked_mul(4, checked_mul(p.r - 1, p.g + p.r - 2));
  rep.flags.push_back({"discriminant_bound", disc_ok});

  BinaryQuadForm q = BinaryQuadForm::from_params(p);
  bool no_neg2 = represents(q, -1, 32).is_no();
  bool no_pencil = q.a != 0 && represents_zero(q).is_no();
  rep.flags.push_back({"no_neg2_curves", no_neg2});
  rep.flags.push_back({"no_elliptic_pencils", no_pencil});
  return rep;
}

Theorem1Report theorem1_applicable(i64 d, i64 g) {
  Theorem1Report rep;
  auto& flags = rep.hypotheses.flags;
  flags.push_back({"g_odd_ge_15", g >= 15 && g % 2 == 1});
  flags.push_back({"d_even_ge_14", d >= 14 && d % 2 == 0});
  i64 d2 = checked_mul(d, d);
  flags.push_back({"d2_gt_8g", d2 > checked_mul(8, g)});
  flags.push_back({"rho_negative", 4 * d < 3 * g + 12});
  flags.push_back({"disc_not_square",
                   !is_perfect_square(checked_add(checked_sub(d2, checked_mul(8, g)), 8))});
  flags.push_back({"h1_range", h1_normal_vanishes(d, g)});

  if (rep.hypotheses.all_ok()) {
    for (auto [dd, gg] : {std::pair<i64, i64>{d, g}, {d + 1, g + 1}, {d + 1, g + 2}, {d + 2, g + 3}}) {
      rep.pairs.push_back({dd, gg, expected_gonality(Params(dd, gg, 3))});
    }
  }
  return rep;
}

std::vector<BnDivisorSolution> bn_divisor_solutions(i64 g) {
  if (g < 2) throw std::domain_error("bn_divisor_solutions: requires g >= 2");
  // rho(g,r,d) = -1  iff  (r+1)(g-d+r) = g+1, so r+1 runs over divisors of g+1.
  std::vector<BnDivisorSolution> out;
  for (i64 t = 2; t <= g + 1; ++t) {
    if ((g + 1) % t != 0) continue;
    i64 r = t - 1;
    i64 d = g + r - (g + 1) / t;
    if (d < r + 1 || d > g - 1) continue;
    out.push_back({r, d});
  }
  return out;
}

}  // namespace k3gon
