#include <gtest/gtest.h>

#include <random>
#include <set>

#include "prasad/root_orbits.hpp"

using namespace prasad;

namespace {

RootVector vec(std::initializer_list<int> xs) {
  RootVector v(static_cast<Eigen::Index>(xs.size()));
  Eigen::Index i = 0;
  for (int x : xs) v(i++) = x;
  return v;
}

SignedPermMatrix mat1(int x) { return SignedPermMatrix::Constant(1, 1, x); }

// B_n roots: +-e_i and +-e_i +- e_j.
std::vector<RootVector> type_b(int n) {
  std::vector<RootVector> out;
  for (int i = 0; i < n; ++i)
    for (int s : {1, -1}) {
      RootVector v = RootVector::Zero(n);
      v(i) = s;
      out.push_back(v);
    }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int s : {1, -1})
        for (int t : {1, -1}) {
          RootVector v = RootVector::Zero(n);
          v(i) = s;
          v(j) = t;
          out.push_back(v);
        }
  return out;
}

SignedPermMatrix random_signed_perm(int n, std::mt19937& rng) {
  std::vector<int> p(n);
  for (int i = 0; i < n; ++i) p[i] = i;
  std::shuffle(p.begin(), p.end(), rng);
  SignedPermMatrix M = SignedPermMatrix::Zero(n, n);
  for (int i = 0; i < n; ++i) M(p[i], i) = (rng() % 2) ? 1 : -1;
  return M;
}

}  // namespace

TEST(RootOrbits, A1NegatedByQTrivialQE) {
  auto R = TwistedRootSystem::from_generators({vec({1}), vec({-1})}, {mat1(-1)}, {true});
  auto recs = classify_orbits(R);
  ASSERT_EQ(recs.size(), 1u);
  EXPECT_TRUE(recs[0].symmetric_F);
  EXPECT_FALSE(recs[0].symmetric_E);
  EXPECT_TRUE(recs[0].splits_over_E);
  EXPECT_EQ(recs[0].deg_EaFa, Deg::one);
}

TEST(RootOrbits, A1SymmetricOverBoth) {
  // Q = Z/2 x Z/2 on Z^3: the Q_E generator negates the root, the other swaps labels
  SignedPermMatrix a = SignedPermMatrix::Identity(3, 3), b = SignedPermMatrix::Zero(3, 3);
  a(0, 0) = -1;
  b(0, 0) = 1;
  b(1, 2) = b(2, 1) = 1;
  auto R = TwistedRootSystem::from_generators({vec({1, 0, 0}), vec({-1, 0, 0})}, {a, b}, {false, true});
  auto recs = classify_orbits(R);
  ASSERT_EQ(recs.size(), 1u);
  EXPECT_TRUE(recs[0].symmetric_F);
  EXPECT_TRUE(recs[0].symmetric_E);
}

TEST(RootOrbits, GlnCyclicOrbits) {
  for (int n : {3, 5}) {
    auto par = gln_orbit_parity(n);
    EXPECT_EQ(par.count_orbits, n - 1);
    EXPECT_EQ(par.count_sym_orbits, 0);
    EXPECT_TRUE(par.parity_ok);
    for (const auto& rec : classify_orbits(gln_root_system(n))) {
      EXPECT_EQ(rec.sym_F, Sym::asym);
      EXPECT_EQ(rec.sym_E, Sym::asym);
    }
  }
  auto two = gln_orbit_parity(2);
  EXPECT_EQ(two.count_orbits, 1);
  EXPECT_EQ(two.count_sym_orbits, 1);
  EXPECT_TRUE(two.parity_ok);
  for (int n = 2; n <= 8; ++n) {
    auto par = gln_orbit_parity(n);
    EXPECT_EQ(par.count_orbits, n - 1) << n;
    EXPECT_TRUE(par.parity_ok) << n;
  }
}

TEST(RootOrbits, RejectsBadActions) {
  EXPECT_THROW(TwistedRootSystem::from_generators({vec({1, 0}), vec({-1, 0})}, {SignedPermMatrix::Identity(2, 2)}, {true}),
               InvalidRootSystem);  // Q_E would be everything
  SignedPermMatrix swap = SignedPermMatrix::Zero(2, 2);
  swap(0, 1) = swap(1, 0) = 1;
  EXPECT_THROW(TwistedRootSystem::from_generators({vec({1, 0}), vec({-1, 0})}, {swap}, {true}), InvalidRootSystem);
  EXPECT_THROW(TwistedRootSystem::from_generators({vec({1, 0})}, {swap}, {true}), InvalidRootSystem);
}

TEST(RootOrbits, OpTwistIsInvolutive) {
  auto R = gln_root_system(4);
  auto T = op_twist(op_twist(R));
  ASSERT_EQ(T.action.size(), R.action.size());
  for (size_t g = 0; g < R.action.size(); ++g) EXPECT_EQ(T.action[g], R.action[g]);
}

TEST(RootOrbits, OpTwistOfNegatingA1IsTrivial) {
  auto R = TwistedRootSystem::from_generators({vec({1}), vec({-1})}, {mat1(-1)}, {true});
  auto op = op_twist(R);
  auto recs = classify_orbits(op);
  ASSERT_EQ(recs.size(), 1u);
  EXPECT_FALSE(recs[0].symmetric_F);
  auto t = tower_of(R, classify_orbits(R)[0]);
  EXPECT_EQ(t.F_op, t.F_pm);  // sym over F, asym over E
  EXPECT_EQ(t.sym_Fop, Sym::asym);
}

TEST(RootOrbits, TowerDegenerateCases) {
  // Q = Z/2 x Z/2 with elements 0, a = 1, b = 2, ab = 3
  FiniteGroup Q = FiniteGroup::abelian({2, 2});
  // two pairs of roots; a negates alpha and lies in Q_E: symmetric over E and F, E_alpha = F_alpha
  auto R = induced_root_system(Q, {0, 1}, {0}, {true, true, false, false}, {});
  auto rec = classify_orbits(R).at(0);
  EXPECT_TRUE(rec.symmetric_F);
  EXPECT_TRUE(rec.symmetric_E);
  EXPECT_EQ(rec.deg_EaFa, Deg::one);
  EXPECT_EQ(tower_of(R, rec).F_op, rec.stab);
  // a negates alpha but lies outside Q_E: symmetric over F only, F_op = F_{+-alpha}
  auto R2 = induced_root_system(Q, {0, 1}, {0}, {true, false, true, false}, {});
  auto rec2 = classify_orbits(R2).at(0);
  EXPECT_TRUE(rec2.symmetric_F);
  EXPECT_FALSE(rec2.symmetric_E);
  EXPECT_EQ(rec2.deg_EaFa, Deg::one);
  EXPECT_EQ(tower_of(R2, rec2).F_op, rec2.stab_pm);
}

TEST(RootOrbits, TowerBiquadraticThirdField) {
  FiniteGroup Q = FiniteGroup::abelian({2, 2});
  // F_alpha fixed by <b>, Q_E = <a>, inertia <b>: F_alpha unramified, E and F_op ramified
  auto R = induced_root_system(Q, {0, 1, 2, 3}, {0, 2}, {true, true, false, false}, {true, false, true, false});
  auto rec = classify_orbits(R).at(0);
  auto t = tower_of(R, rec);
  EXPECT_TRUE(t.biquadratic);
  EXPECT_EQ(t.F_op, (Subgroup{0, 3}));
  EXPECT_FALSE(t.Fa_over_Fpm.ramified);
  EXPECT_TRUE(t.Epm_over_Fpm.ramified);
  EXPECT_TRUE(t.Fop_over_Fpm.ramified);
  EXPECT_EQ(rec.sym_F, Sym::sym_ur);
  EXPECT_EQ(t.sym_Fop, Sym::sym_r);
  // F_alpha fixed by <a>, Q_E = <b>, inertia <b>: F_alpha ramified, E unramified
  auto R2 = induced_root_system(Q, {0, 1, 2, 3}, {0, 1}, {true, false, true, false}, {true, false, true, false});
  auto rec2 = classify_orbits(R2).at(0);
  auto t2 = tower_of(R2, rec2);
  EXPECT_TRUE(t2.biquadratic);
  EXPECT_EQ(t2.F_op, (Subgroup{0, 3}));
  EXPECT_TRUE(t2.Fa_over_Fpm.ramified);
  EXPECT_FALSE(t2.Epm_over_Fpm.ramified);
  EXPECT_TRUE(t2.Fop_over_Fpm.ramified);
  EXPECT_THROW(induced_root_system(Q, {0, 1, 2, 3}, {0, 2}, {true, true, false, false}, {true, false, false, false}),
               InvalidRootSystem);  // trivial inertia with non-cyclic Q is not tame
}

TEST(RootOrbits, Table5RowsFromRealizations) {
  std::vector<ClassKey> keys;
  for (const auto& r : table5_builtin()) keys.push_back(r.key);
  auto diffs = table5_check(keys);
  for (const auto& d : diffs) ADD_FAILURE() << to_string(d.key) << ": " << d.message;
  std::set<ClassKey> realized;
  for (const auto& z : realizations()) realized.insert(z.key);
  EXPECT_EQ(realized, std::set<ClassKey>(keys.begin(), keys.end()));
}

TEST(RootOrbits, Table5Examples) {
  const auto& rows = table5_builtin();
  EXPECT_EQ(rows[3].sym_Fop, Sym::asym);
  EXPECT_EQ(rows[3].deg_EaFop, Deg::two_ur);
  EXPECT_EQ(rows[9].sym_Fop, Sym::sym_ur);
  EXPECT_EQ(rows[9].deg_EaFop, Deg::two_r);
  EXPECT_EQ(rows[0].deg_EaFop, Deg::one);
}

TEST(RootOrbits, Table5CheckReportsMismatch) {
  auto diffs = table5_check({{Deg::one, Sym::asym, Sym::asym}});
  EXPECT_EQ(diffs.size(), 9u);  // nine rows not requested
  auto bogus = table5_check({{Deg::two_r, Sym::asym, Sym::sym_r}});
  EXPECT_FALSE(bogus.empty());
}

TEST(RootOrbits, RandomActionsProperties) {
  std::mt19937 rng(5);
  int checked = 0;
  for (int trial = 0; trial < 400 && checked < 150; ++trial) {
    int n = 1 + static_cast<int>(rng() % 4);
    int k = 1 + static_cast<int>(rng() % 2);
    std::vector<SignedPermMatrix> gens;
    std::vector<bool> off;
    for (int i = 0; i < k; ++i) {
      gens.push_back(random_signed_perm(n, rng));
      off.push_back(rng() % 2);
    }
    if (std::find(off.begin(), off.end(), true) == off.end()) off[0] = true;
    TwistedRootSystem R;
    try {
      R = TwistedRootSystem::from_generators(type_b(n), gens, off);
    } catch (const InvalidRootSystem&) {
      continue;
    }
    const int q = R.group.order();
    bool two_group = (q & (q - 1)) == 0;
    if (q > 16 || (!two_group && k != 1)) continue;
    ++checked;
    auto recs = classify_orbits(R);
    size_t covered = 0;
    for (const auto& rec : recs) {
      EXPECT_EQ(q % static_cast<int>(rec.orbit_F.size()), 0);
      if (rec.symmetric_E) EXPECT_TRUE(rec.symmetric_F);
      EXPECT_EQ(rec.splits_over_E, rec.deg_EaFa == Deg::one);
      covered += rec.symmetric_F ? rec.orbit_F.size() : 2 * rec.orbit_F.size();
      auto t = tower_of(R, rec);
      EXPECT_EQ(t.F_pm, rec.stab_pm);
    }
    EXPECT_EQ(covered, R.roots.size());
    // op twist keeps Q_E-orbits and the symmetry over E
    auto op = op_twist(R);
    auto op_recs = classify_orbits(op);
    std::set<std::vector<int>> e_orbits, e_orbits_op;
    for (const auto& rec : recs) e_orbits.insert(rec.orbit_E);
    for (const auto& rec : op_recs) e_orbits_op.insert(rec.orbit_E);
    for (const auto& rec : op_recs) {
      // F_{+-alpha} is unchanged by the twist
      std::vector<int> pm;
      for (int g = 0; g < q; ++g) {
        int img = R.act(g, rec.rep);
        if (img == rec.rep || img == R.negative(rec.rep)) pm.push_back(g);
      }
      EXPECT_EQ(rec.stab_pm, pm);
    }
    for (const auto& rec : recs) {
      auto it = std::find_if(op_recs.begin(), op_recs.end(), [&](const OrbitRecord& r) {
        return std::binary_search(r.orbit_E.begin(), r.orbit_E.end(), rec.rep) ||
               std::binary_search(r.orbit_E.begin(), r.orbit_E.end(), R.negative(rec.rep));
      });
      ASSERT_NE(it, op_recs.end());
      EXPECT_EQ(it->symmetric_E, rec.symmetric_E);
    }
    for (const auto& o : e_orbits) {
      bool found = e_orbits_op.count(o) > 0;
      if (!found) {
        // the twist may pick the negated orbit as the record representative
        std::vector<int> neg;
        for (int r : o) neg.push_back(R.negative(r));
        std::sort(neg.begin(), neg.end());
        found = e_orbits_op.count(neg) > 0;
      }
      EXPECT_TRUE(found);
    }
  }
  EXPECT_GT(checked, 50);
}
