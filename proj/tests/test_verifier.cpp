#include <doctest.h>

#include <algorithm>
#include <random>
#include <stdexcept>

#include "k3gon/errors.hpp"
#include "k3gon/verifier.hpp"

using namespace k3gon;

namespace {

// Independent membership oracle over an explicit box, straight from the
// constraint definitions.
std::vector<DivClass> brute_force_A(const Params& p, bool strict, i64 n_box, i64 m_box) {
  std::vector<DivClass> out;
  BinaryQuadForm q = BinaryQuadForm::from_params(p);
  for (i64 n = -n_box; n <= n_box; ++n)
    for (i64 m = -m_box; m <= m_box; ++m) {
      if (q.value(m, n) <= 0) continue;
      i64 dh = (2 * p.r - 2) * m + n * p.d;
      if (!(2 < dh && dh < p.d - 2)) continue;
      if (m * p.d + (2 * n - 1) * (p.g - 1) > 0) continue;
      if (strict && q.value(-m, 1 - n) <= 0) continue;
      out.push_back({m, n});
    }
  return out;
}

}  // namespace

TEST_CASE("f_value examples and identity with the pairing") {
  CHECK(f_value(Params(16, 29, 3), {1, 0}) == 12);  // d - 2r + 2
  CHECK(f_value(Params(18, 23, 3), {1, 0}) == 14);
  CHECK(f_value(Params(16, 29, 3), {-2, 1}) == 16);
  CHECK(f_value(Params(16, 29, 3), {0, 1}) == 0);

  std::mt19937_64 rng(41);
  std::uniform_int_distribution<i64> dd(1, 60), gg(0, 120), rr(1, 6), coord(-40, 40);
  for (int i = 0; i < 3000; ++i) {
    Params p(dd(rng), gg(rng), rr(rng));
    K3Lattice l(p);
    DivClass x{coord(rng), coord(rng)};
    CHECK(f_value(p, x) == l.intersect(x, kCurve) - l.self_int(x));
  }
}

TEST_CASE("in_A examples") {
  ConstraintA c{Params(16, 29, 3)};
  CHECK(in_A(c, {1, 0}));
  CHECK_FALSE(in_A(c, {2, 0}));   // fails (iii)
  CHECK_FALSE(in_A(c, {-3, 1}));  // fails (i)
}

TEST_CASE("enumerate_A hand-verified instances") {
  AEnumeration e1 = enumerate_A({Params(16, 29, 3)});
  CHECK(e1.members == std::vector<DivClass>{{1, 0}, {-2, 1}});

  AEnumeration e2 = enumerate_A({Params(18, 23, 3)});
  CHECK(e2.members == std::vector<DivClass>{{1, 0}});

  CHECK_THROWS_AS(enumerate_A({Params(4, 10, 3)}), std::domain_error);
  // Gram determinant nonnegative: termination argument unavailable.
  CHECK_THROWS_AS(enumerate_A({Params(10, 40, 3)}), std::domain_error);
}

TEST_CASE("enumerate_A equals the box oracle") {
  std::mt19937_64 rng(43);
  std::uniform_int_distribution<i64> dd(5, 40), gg(0, 80), rr(2, 6);
  std::bernoulli_distribution strictness(0.5);
  int done = 0;
  while (done < 300) {
    Params p(dd(rng), gg(rng), rr(rng));
    if (p.d * p.d <= 4 * (p.r - 1) * (p.g - 1)) continue;
    bool strict = strictness(rng);
    AEnumeration e = enumerate_A({p, strict});
    // The box must contain the recorded n-range plus margin, and for each
    // such n the whole (ii)-strip of m values.
    i64 n_box = e.n_max + 2;
    i64 m_box = (n_box * p.d + p.d) / (2 * p.r - 2) + 5;
    std::vector<DivClass> oracle = brute_force_A(p, strict, n_box, m_box);
    std::sort(oracle.begin(), oracle.end(),
              [](DivClass a, DivClass b) { return std::tie(a.n, a.m) < std::tie(b.n, b.m); });
    CHECK(e.members == oracle);
    for (const DivClass& dc : e.members) CHECK(in_A({p, strict}, dc));
    ++done;
  }
}

TEST_CASE("strict-mode enumeration is a subset of the default one") {
  std::mt19937_64 rng(47);
  std::uniform_int_distribution<i64> dd(5, 40), gg(0, 80), rr(2, 6);
  int done = 0;
  while (done < 200) {
    Params p(dd(rng), gg(rng), rr(rng));
    if (p.d * p.d <= 4 * (p.r - 1) * (p.g - 1)) continue;
    auto loose = enumerate_A({p, false}).members;
    for (const DivClass& dc : enumerate_A({p, true}).members)
      CHECK(std::find(loose.begin(), loose.end(), dc) != loose.end());
    ++done;
  }
}

TEST_CASE("compute_alpha hand-verified instances") {
  AlphaReport a1 = compute_alpha(Params(16, 29, 3));
  CHECK(a1.alpha == 12);
  CHECK(a1.minimizers == std::vector<DivClass>{{1, 0}});
  CHECK(a1.guaranteed);

  AlphaReport a2 = compute_alpha(Params(18, 23, 3));
  CHECK(a2.alpha == 14);
  CHECK(a2.minimizers == std::vector<DivClass>{{1, 0}});

  CHECK_THROWS_AS(compute_alpha(Params(16, 31, 3)), HypothesisViolation);
  // Non-applicable parameters still enumerate when not demanding hypotheses.
  AlphaReport a3 = compute_alpha(Params(16, 31, 3), false, false);
  CHECK_FALSE(a3.guaranteed);
}

TEST_CASE("compute_alpha reports the double minimizer when d = g-1") {
  // All Theorem-3 hypothesis flags hold at (12,13,3) yet d = g-1, so C-H
  // ties with H; the enumerator must not hard-code uniqueness.
  AlphaReport a = compute_alpha(Params(12, 13, 3));
  CHECK(a.guaranteed);
  CHECK(a.alpha == 8);
  CHECK(a.minimizers == std::vector<DivClass>{{1, 0}, {-1, 1}});
}

TEST_CASE("h1_normal_vanishes examples") {
  CHECK(h1_normal_vanishes(18, 23));
  CHECK_FALSE(h1_normal_vanishes(20, 49));
  CHECK_FALSE(h1_normal_vanishes(19, 45));
}

TEST_CASE("h1_normal_vanishes equals non-effectiveness of C-4H") {
  for (i64 d = 5; d <= 60; ++d)
    for (i64 g = 2; g <= 240; ++g) {
      if (d * d <= 8 * (g - 1)) continue;
      K3Lattice l(Params(d, g, 3));
      if (!l.certified()) continue;
      CHECK(h1_normal_vanishes(d, g) == !l.is_effective({-4, 1}));
    }
}

TEST_CASE("check_very_ample_order examples") {
  CHECK(check_very_ample_order(Params(16, 29, 3), 9).no_violator_found());

  VeryAmpleResult v = check_very_ample_order(Params(16, 29, 3), 11);
  REQUIRE_FALSE(v.no_violator_found());
  CHECK(*v.violator == DivClass{1, 0});

  // k=0 must agree with an independent box search over the same constraints.
  VeryAmpleResult v0 = check_very_ample_order(Params(16, 29, 3), 0);
  K3Lattice l(Params(16, 29, 3));
  bool oracle_found = false;
  for (i64 n = -10; n <= 10 && !oracle_found; ++n)
    for (i64 m = -40; m <= 40 && !oracle_found; ++m) {
      DivClass dc{m, n};
      if (!l.is_effective(dc)) continue;
      if (!l.is_q_effective({-2 * m, 1 - 2 * n})) continue;
      i64 cd = l.intersect(kCurve, dc), sq = l.self_int(dc);
      if (2 * sq <= cd && cd < 2 && cd - 1 <= sq) oracle_found = true;
    }
  CHECK(v0.no_violator_found() == !oracle_found);
}

TEST_CASE("violators satisfy the inequality chain by re-substitution") {
  std::mt19937_64 rng(53);
  std::uniform_int_distribution<i64> dd(6, 50), gg(2, 100), rr(3, 6), kk(0, 40);
  int done = 0;
  while (done < 200) {
    Params p(dd(rng), gg(rng), rr(rng));
    K3Lattice l(p);
    if (!l.certified() || l.form().discriminant() <= 0) continue;
    i64 k = kk(rng);
    VeryAmpleResult v = check_very_ample_order(p, k);
    if (!v.no_violator_found()) {
      DivClass dc = *v.violator;
      CHECK(l.is_effective(dc));
      CHECK(l.is_q_effective({-2 * dc.m, 1 - 2 * dc.n}));
      i64 cd = l.intersect(kCurve, dc), sq = l.self_int(dc);
      CHECK(cd - k - 1 <= sq);
      CHECK(2 * sq <= cd);
      CHECK(cd < 2 * (k + 1));
      // When additionally C.D <= g-1 (and D^2 > 0 so (i) can hold) the
      // violator lies in A.
      if (cd <= p.g - 1 && sq > 0) CHECK(in_A({p, false}, dc));
    }
    ++done;
  }
}

TEST_CASE("mori_exists examples") {
  CHECK(mori_exists(5, 3) == MoriCase::NotExists);
  CHECK(mori_exists(8, 9) == MoriCase::ExistsBoundary);
  CHECK(mori_exists(10, 13) == MoriCase::NotExists);
  CHECK(mori_exists(10, 12) == MoriCase::ExistsInterior);
}

TEST_CASE("rathmann_exists examples") {
  CHECK(rathmann_exists(Params(20, 10, 4)));
  CHECK_FALSE(rathmann_exists(Params(16, 29, 4)));
  CHECK(rathmann_exists(Params(18, 23, 3)));
}

TEST_CASE("theorem3_applicable examples") {
  CHECK(theorem3_applicable(Params(18, 23, 3)).all_ok());
  HypothesisReport h = theorem3_applicable(Params(16, 31, 3));
  CHECK_FALSE(h.flag("no_elliptic_pencils"));
  CHECK_FALSE(theorem3_applicable(Params(14, 25, 3)).flag("discriminant_bound"));
}

TEST_CASE("theorem1_applicable examples") {
  Theorem1Report t1 = theorem1_applicable(18, 23);
  REQUIRE(t1.applicable());
  CHECK(t1.pairs == std::vector<DerivedPair>{
                        {18, 23, 13}, {19, 24, 13}, {19, 25, 14}, {20, 26, 14}});

  Theorem1Report t2 = theorem1_applicable(16, 29);
  REQUIRE(t2.applicable());
  CHECK(t2.pairs == std::vector<DerivedPair>{
                        {16, 29, 12}, {17, 30, 13}, {17, 31, 13}, {18, 32, 14}});

  CHECK_FALSE(theorem1_applicable(16, 31).applicable());
}

TEST_CASE("bn_divisor_solutions examples and properties") {
  CHECK(bn_divisor_solutions(23) ==
        std::vector<BnDivisorSolution>{{1, 12}, {2, 17}, {3, 20}});
  CHECK(bn_divisor_solutions(3) == std::vector<BnDivisorSolution>{{1, 2}});
  CHECK(bn_divisor_solutions(4).empty());
  CHECK_THROWS_AS(bn_divisor_solutions(1), std::domain_error);

  for (i64 g = 2; g <= 200; ++g)
    for (const auto& s : bn_divisor_solutions(g)) {
      CHECK(brill_noether_number(Params(s.d, g, s.r)) == -1);
      // rho is affine in d with slope r+1.
      CHECK(brill_noether_number(Params(s.d + 1, g, s.r)) == -1 + (s.r + 1));
    }
}
